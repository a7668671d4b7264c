#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dwcalc/arith.hpp"
#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/group.hpp"

namespace dwcalc {

/// Normalized U(1)-valued 3-cocycle on a finite group, tabulated in full
/// (|G|^3 entries) so evaluation in hot loops is a lookup.
class ThreeCocycle {
public:
    static ThreeCocycle trivial(FiniteGroup group) {
        auto d = std::make_shared<Data>();
        d->group = std::move(group);
        const int k = d->group.order();
        d->values.assign(static_cast<std::size_t>(k) * k * k, RootOfUnity());
        return ThreeCocycle(std::move(d));
    }

    /// The standard cyclic family: omega_l(x,y,z) = zeta_m^{l*x*floor((y+z)/m)}.
    static ThreeCocycle cyclic_level(int m, long level) {
        if (m < 1)
            throw std::invalid_argument("ThreeCocycle::cyclic_level: order must be positive");
        if (level < 0 || level >= m)
            throw std::invalid_argument("ThreeCocycle::cyclic_level: level out of range");
        auto d = std::make_shared<Data>();
        d->group = FiniteGroup::cyclic(m);
        d->values.reserve(static_cast<std::size_t>(m) * m * m);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z)
                    d->values.emplace_back(m, level * x * ((y + z) / m));
        return ThreeCocycle(std::move(d));
    }

    static ThreeCocycle from_table(FiniteGroup group, std::vector<RootOfUnity> values,
                                   bool validate = true) {
        auto d = std::make_shared<Data>();
        const int k = group.order();
        if (values.size() != static_cast<std::size_t>(k) * k * k)
            throw std::invalid_argument("ThreeCocycle::from_table: table size mismatch");
        d->group = std::move(group);
        d->values = std::move(values);
        ThreeCocycle w(std::move(d));
        if (validate)
            w.validate();
        return w;
    }

    const FiniteGroup& group() const { return d_->group; }

    RootOfUnity operator()(Element x, Element y, Element z) const {
        const int k = d_->group.order();
        if (x < 0 || x >= k || y < 0 || y >= k || z < 0 || z >= k)
            throw std::out_of_range("ThreeCocycle: element index out of range");
        return d_->values[(static_cast<std::size_t>(x) * k + y) * k + z];
    }

    bool is_trivial() const {
        for (const auto& v : d_->values)
            if (!v.is_one())
                return false;
        return true;
    }

    /// Structural equality of tables (shared-state shortcut first).
    bool same_cocycle(const ThreeCocycle& o) const {
        return d_ == o.d_ ||
               (d_->group.same_group(o.d_->group) && d_->values == o.d_->values);
    }

    /// Throws with a witness when normalization or the cocycle identity
    /// omega(y,z,w) omega(x,yz,w) omega(x,y,z) = omega(xy,z,w) omega(x,y,zw) fails.
    void validate() const {
        const int k = d_->group.order();
        const auto& g = d_->group;
        for (Element x = 0; x < k; ++x)
            for (Element y = 0; y < k; ++y)
                for (Element z = 0; z < k; ++z)
                    if ((x == 0 || y == 0 || z == 0) && !(*this)(x, y, z).is_one()) {
                        std::ostringstream os;
                        os << "ThreeCocycle: not normalized at (" << x << "," << y << "," << z << ")";
                        throw std::invalid_argument(os.str());
                    }
        for (Element x = 0; x < k; ++x)
            for (Element y = 0; y < k; ++y)
                for (Element z = 0; z < k; ++z)
                    for (Element w = 0; w < k; ++w) {
                        RootOfUnity lhs =
                            (*this)(y, z, w) * (*this)(x, g.mul(y, z), w) * (*this)(x, y, z);
                        RootOfUnity rhs = (*this)(g.mul(x, y), z, w) * (*this)(x, y, g.mul(z, w));
                        if (lhs != rhs) {
                            std::ostringstream os;
                            os << "ThreeCocycle: cocycle identity fails at (" << x << "," << y
                               << "," << z << "," << w << ")";
                            throw std::invalid_argument(os.str());
                        }
                    }
    }

    bool is_valid() const {
        try {
            validate();
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }

    /// gamma^w_h(x1,x2) = w(h,x1,x2) w(hx1h^-1,hx2h^-1,h) / w(hx1h^-1,h,x2).
    RootOfUnity gamma(Element h, Element x1, Element x2) const {
        const auto& g = d_->group;
        Element c1 = g.mul(g.mul(h, x1), g.inv(h));
        Element c2 = g.mul(g.mul(h, x2), g.inv(h));
        return (*this)(h, x1, x2) * (*this)(c1, c2, h) * (*this)(c1, h, x2).inverse();
    }

    /// theta^w_x(h1,h2) = w(x,h1,h2) w(h1,h2,(h1h2)x(h1h2)^-1) / w(h1,h1xh1^-1,h2).
    RootOfUnity theta(Element x, Element h1, Element h2) const {
        const auto& g = d_->group;
        Element h12 = g.mul(h1, h2);
        Element cx = g.mul(g.mul(h12, x), g.inv(h12));
        Element cx1 = g.mul(g.mul(h1, x), g.inv(h1));
        return (*this)(x, h1, h2) * (*this)(h1, h2, cx) * (*this)(h1, cx1, h2).inverse();
    }

    /// Class of w restricted to <z>, written in the basis given by z itself:
    /// the telescoping product prod_{j=0}^{m-1} w(z, z^j, z) = zeta_m^{level}.
    /// Fails loudly when the product is not an m-th root (non-cocycle input).
    long generator_level(Element z) const {
        const auto& g = d_->group;
        const int m = g.element_order(z);
        RootOfUnity prod;
        for (int j = 0; j < m; ++j)
            prod = prod * (*this)(z, g.power(z, j), z);
        if (m % prod.order() != 0) {
            std::ostringstream os;
            os << "ThreeCocycle::generator_level: telescoping product at z=" << z
               << " is not an order-" << m << " root (input is not a cocycle)";
            throw std::domain_error(os.str());
        }
        return mod_norm(prod.exponent() * (m / prod.order()), m);
    }

    /// Image of [w] under restriction to <z>, expressed in the canonical
    /// basis of <z> (its least-index generator). A coboundary invariant of
    /// the subgroup alone: for Cyclic(m) with omega_l it returns l at every
    /// generator z.
    long restriction_level(Element z) const {
        const auto& g = d_->group;
        const int m = g.element_order(z);
        if (m == 1)
            return 0;
        long raw = generator_level(z);
        Element g0 = canonical_generator(z);
        long v = 0;  // z = g0^v
        Element acc = 0;
        for (long j = 0; j < m; ++j) {
            if (acc == z) {
                v = j;
                break;
            }
            acc = g.mul(acc, g0);
        }
        long vinv = mod_inverse(v, m);
        return mod_norm(raw * vinv % m * vinv, m);
    }

    /// Level L when the group is Cyclic(M) and the table is exactly the
    /// standard omega_L; cached after the first query.
    std::optional<long> standard_cyclic_level() const {
        std::lock_guard<std::mutex> lock(d_->mtx);
        if (!d_->std_cyclic_known) {
            d_->std_cyclic_known = true;
            d_->std_cyclic = std::nullopt;
            if (auto m = d_->group.cyclic_order()) {
                if (*m == 1) {
                    d_->std_cyclic = 0;
                } else {
                    long level = generator_level_nolock(1);
                    if (matches_standard_global(*m, level))
                        d_->std_cyclic = level;
                }
            }
        }
        return d_->std_cyclic;
    }

    /// Level when the restriction of w to <z>, pulled back along i -> z^i,
    /// is exactly the standard cocycle on Z/ord(z); cached per z.
    std::optional<long> standard_restricted_level(Element z) const {
        std::lock_guard<std::mutex> lock(d_->mtx);
        auto it = d_->std_restricted.find(z);
        if (it != d_->std_restricted.end())
            return it->second;
        const auto& g = d_->group;
        const int m = g.element_order(z);
        std::optional<long> out;
        long level = generator_level_nolock(z);
        bool standard = true;
        std::vector<Element> pows(m);
        for (int i = 0; i < m; ++i)
            pows[i] = g.power(z, i);
        for (int i = 0; i < m && standard; ++i)
            for (int j = 0; j < m && standard; ++j)
                for (int t = 0; t < m; ++t)
                    if ((*this)(pows[i], pows[j], pows[t]) !=
                        RootOfUnity(m, level * i * ((j + t) / m))) {
                        standard = false;
                        break;
                    }
        if (standard)
            out = level;
        d_->std_restricted.emplace(z, out);
        return out;
    }

private:
    struct Data {
        FiniteGroup group = FiniteGroup::cyclic(1);
        std::vector<RootOfUnity> values;
        mutable std::mutex mtx;
        mutable bool std_cyclic_known = false;
        mutable std::optional<long> std_cyclic;
        mutable std::map<Element, std::optional<long>> std_restricted;
    };

    explicit ThreeCocycle(std::shared_ptr<Data> d) : d_(std::move(d)) {}

    Element canonical_generator(Element z) const {
        const auto& g = d_->group;
        const int m = g.element_order(z);
        Element best = z;
        for (long v = 1; v < m; ++v)
            if (std::gcd<long, long>(v, m) == 1)
                best = std::min(best, g.power(z, v));
        return best;
    }

    long generator_level_nolock(Element z) const {
        const auto& g = d_->group;
        const int m = g.element_order(z);
        RootOfUnity prod;
        for (int j = 0; j < m; ++j)
            prod = prod * (*this)(z, g.power(z, j), z);
        if (m % prod.order() != 0)
            throw std::domain_error("ThreeCocycle: telescoping product is not an m-th root");
        return mod_norm(prod.exponent() * (m / prod.order()), m);
    }

    bool matches_standard_global(int m, long level) const {
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z)
                    if ((*this)(x, y, z) != RootOfUnity(m, level * x * ((y + z) / m)))
                        return false;
        return true;
    }

    std::shared_ptr<Data> d_;
};

/// omega_l of the cyclic family (a complete set of representatives of the
/// degree-3 classes on Z/m).
inline ThreeCocycle omega_l(int m, long level) {
    return ThreeCocycle::cyclic_level(m, level);
}

/// alpha^l_h(x) = zeta_{m^2}^{l h x}; trivializes theta^l_h as a 2-coboundary.
inline RootOfUnity alpha_l(int m, long level, Element h, Element x) {
    return RootOfUnity(static_cast<long>(m) * m, level * mod_norm(h, m) * mod_norm(x, m));
}

/// Multiplies w by the 3-coboundary of a normalized 2-cochain beta
/// (beta given as a |G| x |G| table with beta(e,.) = beta(.,e) = 1):
/// (d beta)(x,y,z) = beta(y,z) beta(x,yz) / (beta(xy,z) beta(x,y)).
inline ThreeCocycle multiply_by_coboundary(const ThreeCocycle& w,
                                           const std::vector<RootOfUnity>& beta) {
    const auto& g = w.group();
    const int k = g.order();
    if (beta.size() != static_cast<std::size_t>(k) * k)
        throw std::invalid_argument("multiply_by_coboundary: beta table size mismatch");
    auto b = [&](Element x, Element y) { return beta[static_cast<std::size_t>(x) * k + y]; };
    for (Element x = 0; x < k; ++x)
        if (!b(x, 0).is_one() || !b(0, x).is_one())
            throw std::invalid_argument("multiply_by_coboundary: beta is not normalized");
    std::vector<RootOfUnity> values;
    values.reserve(static_cast<std::size_t>(k) * k * k);
    for (Element x = 0; x < k; ++x)
        for (Element y = 0; y < k; ++y)
            for (Element z = 0; z < k; ++z) {
                RootOfUnity db = b(y, z) * b(x, g.mul(y, z)) *
                                 (b(g.mul(x, y), z) * b(x, y)).inverse();
                values.push_back(w(x, y, z) * db);
            }
    return ThreeCocycle::from_table(g, std::move(values), false);
}

}  // namespace dwcalc
