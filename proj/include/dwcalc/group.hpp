#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dwcalc {

/// Group elements are dense indices 0..order-1 with the identity at 0.
using Element = int;

struct ConjugacyData {
    std::vector<std::vector<Element>> classes;
    std::vector<Element> representatives;            // least index in each class
    std::vector<std::vector<Element>> centralizers;  // of the representative
};

/// Finite group given as Cyclic(m), a product of cyclic factors, or an
/// explicit Cayley table. Immutable after construction; copies share state.
class FiniteGroup {
public:
    enum class Kind { Cyclic, AbelianProduct, CayleyTable };

    static FiniteGroup cyclic(int m) {
        if (m < 1)
            throw std::invalid_argument("FiniteGroup::cyclic: order must be positive");
        return abelian_like(Kind::Cyclic, {m});
    }

    static FiniteGroup abelian_product(std::vector<int> factors) {
        if (factors.empty())
            throw std::invalid_argument("FiniteGroup::abelian_product: no factors");
        for (int f : factors)
            if (f < 1)
                throw std::invalid_argument("FiniteGroup::abelian_product: factors must be positive");
        return abelian_like(Kind::AbelianProduct, std::move(factors));
    }

    /// check_associativity defaults to on for order <= 64 (the check is O(k^3)).
    static FiniteGroup cayley_table(const std::vector<std::vector<int>>& table,
                                    std::optional<bool> check_associativity = std::nullopt) {
        auto d = std::make_shared<Data>();
        d->kind = Kind::CayleyTable;
        d->order = static_cast<int>(table.size());
        if (d->order < 1)
            throw std::invalid_argument("FiniteGroup::cayley_table: empty table");
        const int k = d->order;
        d->mul.assign(static_cast<std::size_t>(k) * k, 0);
        for (int i = 0; i < k; ++i) {
            if (static_cast<int>(table[i].size()) != k)
                throw std::invalid_argument("FiniteGroup::cayley_table: table is not square");
            for (int j = 0; j < k; ++j) {
                int v = table[i][j];
                if (v < 0 || v >= k)
                    throw std::invalid_argument("FiniteGroup::cayley_table: entry out of range");
                d->mul[static_cast<std::size_t>(i) * k + j] = v;
            }
        }
        validate_structure(*d, check_associativity.value_or(k <= 64));
        finish(*d);
        return FiniteGroup(std::move(d));
    }

    int order() const { return d_->order; }
    Kind kind() const { return d_->kind; }
    Element identity() const { return 0; }

    Element mul(Element a, Element b) const {
        check_element(a);
        check_element(b);
        return d_->mul[static_cast<std::size_t>(a) * d_->order + b];
    }

    Element inv(Element a) const {
        check_element(a);
        return d_->inv[a];
    }

    /// g^n, handling negative n through the inverse.
    Element power(Element g, long n) const {
        check_element(g);
        Element base = g;
        if (n < 0) {
            base = d_->inv[g];
            n = -n;
        }
        Element acc = 0;
        while (n > 0) {
            if (n & 1)
                acc = d_->mul[static_cast<std::size_t>(acc) * d_->order + base];
            base = d_->mul[static_cast<std::size_t>(base) * d_->order + base];
            n >>= 1;
        }
        return acc;
    }

    int element_order(Element g) const {
        check_element(g);
        return d_->elt_order[g];
    }

    bool is_abelian() const { return d_->abelian; }

    /// lcm of all element orders.
    int exponent() const {
        long e = 1;
        for (int o : d_->elt_order)
            e = std::lcm<long>(e, o);
        return static_cast<int>(e);
    }

    /// m for Cyclic(m); empty otherwise.
    std::optional<int> cyclic_order() const {
        if (d_->kind == Kind::Cyclic)
            return d_->factors[0];
        return std::nullopt;
    }

    /// The cyclic factors for Cyclic / AbelianProduct specs.
    const std::vector<int>& abelian_factors() const {
        if (d_->kind == Kind::CayleyTable)
            throw std::domain_error("FiniteGroup::abelian_factors: group has no factor spec");
        return d_->factors;
    }

    std::vector<Element> centralizer(Element g) const {
        check_element(g);
        std::vector<Element> out;
        for (Element x = 0; x < d_->order; ++x)
            if (mul(x, g) == mul(g, x))
                out.push_back(x);
        return out;
    }

    /// Classes by orbit enumeration; representatives are the least index.
    const ConjugacyData& conjugacy_data() const {
        std::lock_guard<std::mutex> lock(d_->mtx);
        if (!d_->conj) {
            auto cd = std::make_shared<ConjugacyData>();
            const int k = d_->order;
            std::vector<bool> seen(k, false);
            for (Element g = 0; g < k; ++g) {
                if (seen[g])
                    continue;
                std::vector<Element> cls;
                for (Element h = 0; h < k; ++h) {
                    Element c = mul(mul(h, g), inv(h));
                    if (!seen[c]) {
                        seen[c] = true;
                        cls.push_back(c);
                    }
                }
                std::sort(cls.begin(), cls.end());
                cd->representatives.push_back(cls.front());
                cd->centralizers.push_back(centralizer(cls.front()));
                cd->classes.push_back(std::move(cls));
            }
            d_->conj = std::move(cd);
        }
        return *d_->conj;
    }

    /// All ordered pairs (x, h) with xh = hx.
    std::vector<std::pair<Element, Element>> commuting_pairs() const {
        std::vector<std::pair<Element, Element>> out;
        for (Element x = 0; x < d_->order; ++x)
            for (Element h = 0; h < d_->order; ++h)
                if (mul(x, h) == mul(h, x))
                    out.emplace_back(x, h);
        return out;
    }

    bool commutes(Element x, Element h) const { return mul(x, h) == mul(h, x); }

    /// Structural equality: same multiplication table.
    bool same_group(const FiniteGroup& o) const {
        return d_ == o.d_ || d_->mul == o.d_->mul;
    }

    /// Tuple coordinates of an AbelianProduct element (mixed-radix decoding).
    std::vector<int> coordinates(Element g) const {
        check_element(g);
        std::vector<int> out;
        int rest = g;
        for (int f : abelian_factors()) {
            out.push_back(rest % f);
            rest /= f;
        }
        return out;
    }

    Element from_coordinates(const std::vector<int>& coords) const {
        const auto& fs = abelian_factors();
        if (coords.size() != fs.size())
            throw std::invalid_argument("FiniteGroup::from_coordinates: arity mismatch");
        Element g = 0;
        for (std::size_t i = fs.size(); i-- > 0;) {
            int c = ((coords[i] % fs[i]) + fs[i]) % fs[i];
            g = g * fs[i] + c;
        }
        return g;
    }

    std::string description() const {
        std::ostringstream os;
        switch (d_->kind) {
            case Kind::Cyclic:
                os << "cyclic:" << d_->factors[0];
                break;
            case Kind::AbelianProduct: {
                os << "abelian:";
                for (std::size_t i = 0; i < d_->factors.size(); ++i)
                    os << (i ? "," : "") << d_->factors[i];
                break;
            }
            case Kind::CayleyTable:
                os << "table:order" << d_->order;
                break;
        }
        return os.str();
    }

private:
    struct Data {
        Kind kind = Kind::Cyclic;
        int order = 1;
        std::vector<int> factors;
        std::vector<Element> mul;
        std::vector<Element> inv;
        std::vector<int> elt_order;
        bool abelian = true;
        mutable std::mutex mtx;
        mutable std::shared_ptr<const ConjugacyData> conj;
    };

    explicit FiniteGroup(std::shared_ptr<Data> d) : d_(std::move(d)) {}

    void check_element(Element g) const {
        if (g < 0 || g >= d_->order)
            throw std::out_of_range("FiniteGroup: element index out of range");
    }

    static FiniteGroup abelian_like(Kind kind, std::vector<int> factors) {
        auto d = std::make_shared<Data>();
        d->kind = kind;
        d->factors = std::move(factors);
        long n = 1;
        for (int f : d->factors)
            n *= f;
        if (n > 1 << 20)
            throw std::invalid_argument("FiniteGroup: order too large");
        d->order = static_cast<int>(n);
        const int k = d->order;
        d->mul.assign(static_cast<std::size_t>(k) * k, 0);
        for (Element a = 0; a < k; ++a)
            for (Element b = 0; b < k; ++b) {
                int ra = a, rb = b, g = 0, radix = 1;
                for (int f : d->factors) {
                    g += ((ra + rb) % f) * radix;
                    radix *= f;
                    ra /= f;
                    rb /= f;
                }
                d->mul[static_cast<std::size_t>(a) * k + b] = g;
            }
        finish(*d);
        return FiniteGroup(std::move(d));
    }

    static void validate_structure(const Data& d, bool check_associativity) {
        const int k = d.order;
        auto at = [&](Element a, Element b) { return d.mul[static_cast<std::size_t>(a) * k + b]; };
        for (Element g = 0; g < k; ++g)
            if (at(0, g) != g || at(g, 0) != g)
                throw std::invalid_argument("FiniteGroup: index 0 is not an identity");
        for (Element g = 0; g < k; ++g) {
            bool has_inv = false;
            std::vector<bool> row(k, false), col(k, false);
            for (Element h = 0; h < k; ++h) {
                if (at(g, h) == 0 && at(h, g) == 0)
                    has_inv = true;
                if (row[at(g, h)] || col[at(h, g)])
                    throw std::invalid_argument("FiniteGroup: table row/column is not a permutation");
                row[at(g, h)] = col[at(h, g)] = true;
            }
            if (!has_inv)
                throw std::invalid_argument("FiniteGroup: element without two-sided inverse");
        }
        if (check_associativity)
            for (Element a = 0; a < k; ++a)
                for (Element b = 0; b < k; ++b)
                    for (Element c = 0; c < k; ++c)
                        if (at(at(a, b), c) != at(a, at(b, c)))
                            throw std::invalid_argument("FiniteGroup: table is not associative");
    }

    static void finish(Data& d) {
        const int k = d.order;
        auto at = [&](Element a, Element b) { return d.mul[static_cast<std::size_t>(a) * k + b]; };
        d.inv.assign(k, 0);
        for (Element g = 0; g < k; ++g)
            for (Element h = 0; h < k; ++h)
                if (at(g, h) == 0) {
                    d.inv[g] = h;
                    break;
                }
        d.elt_order.assign(k, 1);
        for (Element g = 0; g < k; ++g) {
            Element acc = g;
            int o = 1;
            while (acc != 0) {
                acc = at(acc, g);
                ++o;
            }
            d.elt_order[g] = o;
        }
        d.abelian = true;
        for (Element a = 0; a < k && d.abelian; ++a)
            for (Element b = a + 1; b < k; ++b)
                if (at(a, b) != at(b, a)) {
                    d.abelian = false;
                    break;
                }
    }

    std::shared_ptr<Data> d_;
};

}  // namespace dwcalc
