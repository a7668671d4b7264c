#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/group.hpp"
#include "dwcalc/seifert.hpp"

namespace dwcalc {

/// Standard presentation of pi_1 of M_O(g;(a_j,b_j)):
///   generators x_1..x_n, u_1,v_1..u_g,v_g, h
///   relations  h central, x_j^{a_j} h^{b_j} = e,
///              x_1...x_n [u_1,v_1]...[u_g,v_g] = e.
struct SeifertPresentation {
    int genus = 0;
    std::vector<Fiber> fibers;

    static SeifertPresentation from(const SeifertData& sf) {
        return SeifertPresentation{sf.genus(), sf.fibers()};
    }

    int num_generators() const { return static_cast<int>(fibers.size()) + 2 * genus + 1; }

    std::string relations_string() const {
        std::ostringstream os;
        os << "h central";
        for (std::size_t j = 0; j < fibers.size(); ++j)
            os << "; x" << j + 1 << "^" << fibers[j].a << " h^" << fibers[j].b << " = e";
        os << "; ";
        for (std::size_t j = 0; j < fibers.size(); ++j)
            os << "x" << j + 1 << " ";
        for (int i = 1; i <= genus; ++i)
            os << "[u" << i << ",v" << i << "] ";
        os << "= e";
        return os.str();
    }
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Work estimate sum_h |C(h)|^2 (n + g); refuse when it exceeds the budget.
inline long long hom_count_work_estimate(const FiniteGroup& g, const SeifertData& sf) {
    long long total = 0;
    long long weight = sf.num_fibers() + sf.genus();
    if (weight == 0)
        weight = 1;
    for (Element h = 0; h < g.order(); ++h) {
        long long c = static_cast<long long>(g.centralizer(h).size());
        total += c * c * weight;
    }
    return total;
}

inline constexpr long long kDefaultHomBudget = 500'000'000;

/// #Hom(pi_1(M), G) by counting over the image h of the central generator:
/// every other generator lands in C(h), the per-fiber solution sets become
/// indicator functions on C(h), and the surface relation is counted by
/// convolution (with the commutator-pair count c(y) = #{(u,v): [u,v] = y}
/// convolved g times).
inline Int count_homs(const FiniteGroup& g, const SeifertData& sf,
                      long long budget = kDefaultHomBudget) {
    long long est = hom_count_work_estimate(g, sf);
    if (est > budget) {
        std::ostringstream os;
        os << "count_homs: work estimate " << est << " exceeds budget " << budget;
        throw BudgetExceeded(os.str());
    }

    Int total = 0;
    for (Element h = 0; h < g.order(); ++h) {
        std::vector<Element> cent = g.centralizer(h);
        const int k = static_cast<int>(cent.size());
        std::vector<int> local(g.order(), -1);
        for (int i = 0; i < k; ++i)
            local[cent[i]] = i;

        // vec[w] = number of partial products evaluating to cent[w]
        std::vector<Int> vec(k, Int(0));
        vec[local[0]] = 1;

        auto convolve = [&](const std::vector<Int>& f) {
            std::vector<Int> out(k, Int(0));
            for (int i = 0; i < k; ++i) {
                if (vec[i] == 0)
                    continue;
                for (int j = 0; j < k; ++j) {
                    if (f[j] == 0)
                        continue;
                    out[local[g.mul(cent[i], cent[j])]] += vec[i] * f[j];
                }
            }
            vec = std::move(out);
        };

        bool empty_fiber = false;
        for (const auto& fb : sf.fibers()) {
            std::vector<Int> ind(k, Int(0));
            bool any = false;
            for (int i = 0; i < k; ++i) {
                Element x = cent[i];
                if (g.mul(g.power(x, fb.a), g.power(h, fb.b)) == 0) {
                    ind[i] = 1;
                    any = true;
                }
            }
            if (!any) {
                empty_fiber = true;
                break;
            }
            convolve(ind);
        }
        if (empty_fiber)
            continue;

        if (sf.genus() > 0) {
            std::vector<Int> comm(k, Int(0));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    Element c = g.mul(g.mul(cent[i], cent[j]),
                                      g.mul(g.inv(cent[i]), g.inv(cent[j])));
                    comm[local[c]] += 1;
                }
            for (int rep = 0; rep < sf.genus(); ++rep)
                convolve(comm);
        }
        total += vec[local[0]];
    }
    return total;
}

/// Full enumeration over all generator tuples; the internal check for the
/// convolution path. Only usable for tiny instances.
inline Int count_homs_naive(const FiniteGroup& g, const SeifertData& sf) {
    const int k = g.order();
    const int n = sf.num_fibers();
    const int gen = sf.genus();
    const int slots = n + 2 * gen;
    double work = static_cast<double>(k);
    for (int i = 0; i < slots; ++i)
        work *= k;
    if (work > 5e8)
        throw std::invalid_argument("count_homs_naive: instance too large");

    Int total = 0;
    std::vector<Element> tup(slots, 0);
    for (Element h = 0; h < k; ++h) {
        bool done = false;
        std::fill(tup.begin(), tup.end(), 0);
        while (!done) {
            bool ok = true;
            for (int i = 0; i < slots && ok; ++i)
                if (!g.commutes(tup[i], h))
                    ok = false;
            for (int j = 0; j < n && ok; ++j)
                if (g.mul(g.power(tup[j], sf.fibers()[j].a), g.power(h, sf.fibers()[j].b)) != 0)
                    ok = false;
            if (ok) {
                Element prod = 0;
                for (int j = 0; j < n; ++j)
                    prod = g.mul(prod, tup[j]);
                for (int i = 0; i < gen; ++i) {
                    Element u = tup[n + 2 * i], v = tup[n + 2 * i + 1];
                    prod = g.mul(prod, g.mul(g.mul(u, v), g.mul(g.inv(u), g.inv(v))));
                }
                if (prod == 0)
                    total += 1;
            }
            int i = 0;
            while (i < slots && ++tup[i] == k) {
                tup[i] = 0;
                ++i;
            }
            if (i == slots)
                done = true;
        }
    }
    return total;
}

/// Definition-level untwisted invariant: Z = #Hom(pi_1(M), G) / #G.
inline DWResult dw_untwisted(const FiniteGroup& g, const SeifertData& sf,
                             long long budget = kDefaultHomBudget) {
    Int count = count_homs(g, sf, budget);
    Rational z(count, Int(g.order()));
    return make_result(Cyclotomic(z), Method::Oracle);
}

}  // namespace dwcalc
