#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwcalc/cocycle.hpp"
#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/group.hpp"
#include "dwcalc/kappa.hpp"

namespace dwcalc {

/// Function on the commuting pairs {(x,h) : xh = hx} of a group, the torus
/// vector space of the theory. Entries off the commuting locus stay zero.
class EVector {
public:
    EVector(FiniteGroup group, ThreeCocycle omega)
        : group_(std::move(group)), omega_(std::move(omega)) {
        if (!group_.same_group(omega_.group()))
            throw std::invalid_argument("EVector: cocycle defined on a different group");
        values_.assign(static_cast<std::size_t>(group_.order()) * group_.order(), Cyclotomic());
    }

    const FiniteGroup& group() const { return group_; }
    const ThreeCocycle& omega() const { return omega_; }

    const Cyclotomic& at(Element x, Element h) const {
        return values_[static_cast<std::size_t>(check(x)) * group_.order() + check(h)];
    }

    void set(Element x, Element h, Cyclotomic v) {
        if (!group_.commutes(x, h))
            throw std::invalid_argument("EVector::set: (x,h) is not a commuting pair");
        values_[static_cast<std::size_t>(check(x)) * group_.order() + check(h)] = std::move(v);
    }

    bool row_nonzero(Element h) const {
        for (Element x = 0; x < group_.order(); ++x)
            if (!at(x, h).is_zero())
                return true;
        return false;
    }

    bool operator==(const EVector& rhs) const {
        if (!group_.same_group(rhs.group_))
            return false;
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] != rhs.values_[i])
                return false;
        return true;
    }
    bool operator!=(const EVector& rhs) const { return !(*this == rhs); }

    EVector operator+(const EVector& rhs) const {
        require_compatible(rhs, "EVector::operator+");
        EVector out = *this;
        for (std::size_t i = 0; i < values_.size(); ++i)
            out.values_[i] = out.values_[i] + rhs.values_[i];
        return out;
    }

    EVector operator*(const Rational& r) const {
        EVector out = *this;
        for (auto& v : out.values_)
            v = v * r;
        return out;
    }

    EVector scaled(const Cyclotomic& c) const {
        EVector out = *this;
        for (auto& v : out.values_)
            if (!v.is_zero())
                v = v * c;
        return out;
    }

    void require_compatible(const EVector& rhs, const char* where) const {
        if (!group_.same_group(rhs.group_))
            throw std::invalid_argument(std::string(where) + ": group mismatch");
        if (!omega_.same_cocycle(rhs.omega_))
            throw std::invalid_argument(std::string(where) + ": cocycle mismatch");
    }

private:
    Element check(Element g) const {
        if (g < 0 || g >= group_.order())
            throw std::out_of_range("EVector: element index out of range");
        return g;
    }

    FiniteGroup group_;
    ThreeCocycle omega_;
    std::vector<Cyclotomic> values_;
};

/// (u, v) = (1/#G) sum_{xh=hx} u(x,h) conj(v(x,h)).
inline Cyclotomic inner(const EVector& u, const EVector& v) {
    u.require_compatible(v, "inner");
    const auto& g = u.group();
    Cyclotomic acc;
    for (Element h = 0; h < g.order(); ++h) {
        if (!u.row_nonzero(h))
            continue;
        for (Element x = 0; x < g.order(); ++x) {
            const Cyclotomic& a = u.at(x, h);
            if (a.is_zero())
                continue;
            const Cyclotomic& b = v.at(x, h);
            if (b.is_zero())
                continue;
            acc += a * b.conjugate();
        }
    }
    return acc / Rational(g.order());
}

/// Irreducible character of the twisted double, carrying its label, the
/// E-vector of values, and dim = sum_{x in A} chi(x, e).
struct TQDCharacter {
    Element support;        // class representative h (cyclic) or c (abelian)
    std::vector<int> rep;   // {s} for cyclic; the psi exponent tuple for abelian
    EVector values;
    Cyclotomic dim;

    std::string label() const {
        std::ostringstream os;
        os << "(" << support;
        for (int r : rep)
            os << "," << r;
        os << ")";
        return os.str();
    }
};

namespace detail {

inline Cyclotomic character_dim(const EVector& v) {
    Cyclotomic d;
    for (Element x = 0; x < v.group().order(); ++x)
        d += v.at(x, 0);
    return d;
}

}  // namespace detail

/// chi^l_{h,s}(x,y) = delta_{h,x} zeta_{m^2}^{(l h + m s) y}.
inline TQDCharacter chi_cyclic(int m, long level, Element h, int s) {
    if (s < 0 || s >= m)
        throw std::invalid_argument("chi_cyclic: s out of range");
    FiniteGroup g = FiniteGroup::cyclic(m);
    ThreeCocycle w = omega_l(m, level);
    EVector v(g, w);
    for (Element y = 0; y < m; ++y)
        v.set(h, y, RootOfUnity(static_cast<long>(m) * m,
                                (level * mod_norm(h, m) + static_cast<long>(m) * s) * y)
                        .to_cyclotomic());
    Cyclotomic dim = detail::character_dim(v);
    return TQDCharacter{h, {s}, std::move(v), std::move(dim)};
}

/// Untwisted abelian specialization: chi(x,h) = delta_{c,x} psi(h) with psi
/// the ordinary character with exponent tuple t.
inline TQDCharacter chi_abelian_untwisted(const FiniteGroup& g, Element c,
                                          const std::vector<int>& psi) {
    if (!g.is_abelian())
        throw std::invalid_argument("chi_abelian_untwisted: group is not abelian");
    const auto& factors = g.abelian_factors();
    if (psi.size() != factors.size())
        throw std::invalid_argument("chi_abelian_untwisted: character tuple arity mismatch");
    ThreeCocycle w = ThreeCocycle::trivial(g);
    EVector v(g, w);
    for (Element h = 0; h < g.order(); ++h) {
        auto coords = g.coordinates(h);
        RootOfUnity val;
        for (std::size_t i = 0; i < factors.size(); ++i)
            val = val * RootOfUnity(factors[i], static_cast<long>(psi[i]) * coords[i]);
        v.set(c, h, val.to_cyclotomic());
    }
    Cyclotomic dim = detail::character_dim(v);
    return TQDCharacter{c, psi, std::move(v), std::move(dim)};
}

/// The basis Lambda^w where the paper provides it: cyclic groups at any
/// level, and abelian groups with trivial cocycle. Anything else throws.
inline std::vector<TQDCharacter> character_family(const FiniteGroup& g, const ThreeCocycle& w) {
    std::vector<TQDCharacter> out;
    if (auto m = g.cyclic_order()) {
        auto level = w.standard_cyclic_level();
        if (!level)
            throw std::domain_error(
                "character_family: cyclic group requires a standard-family cocycle");
        for (Element h = 0; h < *m; ++h)
            for (int s = 0; s < *m; ++s)
                out.push_back(chi_cyclic(*m, *level, h, s));
        return out;
    }
    if (g.is_abelian() && g.kind() != FiniteGroup::Kind::CayleyTable && w.is_trivial()) {
        const auto& factors = g.abelian_factors();
        std::vector<int> psi(factors.size(), 0);
        for (Element c = 0; c < g.order(); ++c) {
            // enumerate all character tuples by mixed-radix counting
            std::fill(psi.begin(), psi.end(), 0);
            while (true) {
                out.push_back(chi_abelian_untwisted(g, c, psi));
                std::size_t i = 0;
                while (i < psi.size() && ++psi[i] == factors[i]) {
                    psi[i] = 0;
                    ++i;
                }
                if (i == psi.size())
                    break;
            }
        }
        return out;
    }
    throw std::domain_error("character_family: unsupported (group, cocycle) combination");
}

/// (S^{-1} v)(x,h) = gamma_h(x, x^{-1})^{-1} v(h, x^{-1}); an isometry of E.
inline EVector s_inverse(const EVector& v) {
    const auto& g = v.group();
    EVector out(g, v.omega());
    for (Element x = 0; x < g.order(); ++x)
        for (Element h = 0; h < g.order(); ++h) {
            if (!g.commutes(x, h))
                continue;
            const Cyclotomic& src = v.at(h, g.inv(x));
            if (src.is_zero())
                continue;
            RootOfUnity phase = v.omega().gamma(h, x, g.inv(x)).inverse();
            out.set(x, h, src * phase.to_cyclotomic());
        }
    return out;
}

/// Pair-of-pants product:
/// mul(u, v)(x,h) = sum_{x1 x2 = x} gamma_h(x1,x2) u(x1,h) v(x2,h),
/// the sum restricted to summands where both factors live in E's domain.
inline EVector mul(const EVector& u, const EVector& v) {
    u.require_compatible(v, "mul");
    const auto& g = u.group();
    const auto& w = u.omega();
    EVector out(g, w);
    for (Element h = 0; h < g.order(); ++h) {
        if (!u.row_nonzero(h) || !v.row_nonzero(h))
            continue;
        for (Element x = 0; x < g.order(); ++x) {
            if (!g.commutes(x, h))
                continue;
            Cyclotomic acc;
            for (Element x1 = 0; x1 < g.order(); ++x1) {
                if (!g.commutes(x1, h))
                    continue;
                const Cyclotomic& a = u.at(x1, h);
                if (a.is_zero())
                    continue;
                Element x2 = g.mul(g.inv(x1), x);
                if (!g.commutes(x2, h))
                    continue;
                const Cyclotomic& b = v.at(x2, h);
                if (b.is_zero())
                    continue;
                acc += a * b * w.gamma(h, x1, x2).to_cyclotomic();
            }
            out.set(x, h, std::move(acc));
        }
    }
    return out;
}

/// Z^w(ST)(x,h) = delta_{x,e}.
inline EVector solid_torus_vector(const FiniteGroup& g, const ThreeCocycle& w) {
    EVector out(g, w);
    for (Element h = 0; h < g.order(); ++h)
        out.set(0, h, Cyclotomic(Rational(1)));
    return out;
}

struct GluingMatrix {
    long a = 1, b = 0;    // first row: the fiber data
    long ap = 0, bp = 1;  // completing row, a*bp - b*ap = 1
};

/// Completes coprime (a, b) to a unimodular matrix by the extended
/// Euclidean algorithm.
inline GluingMatrix complete_to_unimodular(long a, long b) {
    long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    // old_s*a + old_t*b = old_r = +-gcd
    if (old_r == 0)
        throw std::invalid_argument("complete_to_unimodular: (0,0) has no completion");
    long sign = old_r > 0 ? 1 : -1;
    if (std::abs(old_r) != 1)
        throw std::invalid_argument("complete_to_unimodular: a and b are not coprime");
    // a*bp - b*ap = 1 with bp = sign*old_s, ap = -sign*old_t
    return GluingMatrix{a, b, -sign * old_t, sign * old_s};
}

/// Image of the solid-torus vector under the mapping class (a,b;a',b'):
/// (x,h) -> kappa^w_{a,-b}(x^{a'} h^{b'}) * delta_{x^a h^b, e}.
inline EVector glued_solid_torus_vector(const ThreeCocycle& w, const GluingMatrix& f) {
    if (f.a * f.bp - f.b * f.ap != 1)
        throw std::invalid_argument("glued_solid_torus_vector: matrix is not unimodular");
    const auto& g = w.group();
    EVector out(g, w);
    for (Element x = 0; x < g.order(); ++x)
        for (Element h = 0; h < g.order(); ++h) {
            if (!g.commutes(x, h))
                continue;
            if (g.mul(g.power(x, f.a), g.power(h, f.b)) != 0)
                continue;
            Element zarg = g.mul(g.power(x, f.ap), g.power(h, f.bp));
            out.set(x, h, kappa(w, f.a, -f.b, zarg).to_cyclotomic());
        }
    return out;
}

/// Coefficients of v in the orthonormal basis {S^{-1} chi_rho}; the family
/// is the one character_family provides for (group, omega).
inline std::vector<Cyclotomic> expand_in_s_basis(const EVector& v,
                                                 const std::vector<TQDCharacter>& family) {
    std::vector<Cyclotomic> out;
    out.reserve(family.size());
    for (const auto& chi : family)
        out.push_back(inner(v, s_inverse(chi.values)));
    return out;
}

inline std::vector<Cyclotomic> expand_in_s_basis(const EVector& v) {
    return expand_in_s_basis(v, character_family(v.group(), v.omega()));
}

}  // namespace dwcalc
