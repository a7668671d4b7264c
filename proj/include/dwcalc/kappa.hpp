#pragma once

#include <cstdlib>
#include <vector>

#include "dwcalc/arith.hpp"
#include "dwcalc/cocycle.hpp"
#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/group.hpp"

namespace dwcalc {

struct KappaQuery {
    long a = 0;
    long b = 0;
    Element z = 0;
};

/// Euclidean-remainder product evaluation of the gluing phase
/// omega_{[A,B,C]-[A,D,C]}(phi_z). Only evaluates omega at powers of z, so
/// it is defined for every group and cocycle; it is the reference route
/// against which the closed form below is checked.
inline RootOfUnity kappa_oracle(const ThreeCocycle& omega, const KappaQuery& q) {
    const auto& g = omega.group();
    const long a = q.a, b = q.b;
    if (a == 0 || b == 0 || g.element_order(q.z) == 1)
        return RootOfUnity();
    auto pw = [&](long k) { return g.power(q.z, k); };

    // Product over the remainder sequence r_{-1}, r_0 (same sign),
    // r_{i-2} = k_i r_{i-1} + r_i, with alternating exponents (-1)^{i-1}.
    auto remainder_product = [&](long rm1, long r0) {
        std::vector<long> rs{rm1, r0};
        std::vector<long> ks;
        while (rs.back() != 0) {
            long prev = rs[rs.size() - 2], cur = rs.back();
            long k = std::abs(prev) / std::abs(cur);
            ks.push_back(k);
            rs.push_back(prev - k * cur);
        }
        RootOfUnity total;
        for (std::size_t i = 1; i <= ks.size(); ++i) {
            RootOfUnity inner;
            long r_prev = rs[i - 1];  // r_{i-2}
            long r_cur = rs[i];       // r_{i-1}
            for (long j = 1; j <= ks[i - 1]; ++j)
                inner = inner * omega(pw(r_cur), pw(r_prev - j * r_cur), pw(r_cur));
            total = (i % 2 == 1) ? total * inner : total * inner.inverse();
        }
        return total;
    };

    if ((a > 0) == (b > 0))
        return remainder_product(b, a);

    // ab < 0 reduces to the same-sign case with r_0 = -a, inverted signs,
    // and an explicit three-term correction factor.
    RootOfUnity corr = omega(pw(-a), pw(a), pw(b - a)) * omega(pw(b + a), pw(-a), pw(a)) *
                       omega(pw(a), pw(b), pw(-a)).inverse();
    return corr * remainder_product(b, -a).inverse();
}

/// Closed-form kappa^w_{a,b}(z).
///
/// Route 1: Cyclic(M) carrying the standard omega_L gives
///   zeta_{M^2}^{L z (b*(az mod M) - a*(bz mod M))},
/// valid for every z (this is the form the eta formula requires).
/// Route 2: when w restricted to <z> is the standard cocycle in the z-basis
/// at level ell, the value is zeta_{m^2}^{ell (b*(a mod m) - a*(b mod m))}.
/// Other tables fall back to the product evaluation.
inline RootOfUnity kappa(const ThreeCocycle& omega, const KappaQuery& q) {
    const auto& g = omega.group();
    const long m = g.element_order(q.z);
    if (m == 1 || q.a == 0 || q.b == 0)
        return RootOfUnity();

    auto reduce = [](__int128 v, long mod) {
        long r = static_cast<long>(v % mod);
        return r < 0 ? r + mod : r;
    };

    if (g.cyclic_order()) {
        if (auto L = omega.standard_cyclic_level()) {
            const long M = *g.cyclic_order();
            const long zt = q.z;  // cyclic element index is its residue
            long az = mod_norm(q.a % M * zt, M);
            long bz = mod_norm(q.b % M * zt, M);
            __int128 diff = static_cast<__int128>(q.b) * az - static_cast<__int128>(q.a) * bz;
            long e = reduce(static_cast<__int128>(*L) * zt * diff, M * M);
            return RootOfUnity(M * M, e);
        }
    }
    if (auto ell = omega.standard_restricted_level(q.z)) {
        long ar = mod_norm(q.a % m, m);
        long br = mod_norm(q.b % m, m);
        __int128 diff = static_cast<__int128>(q.b) * ar - static_cast<__int128>(q.a) * br;
        long e = reduce(static_cast<__int128>(*ell) * diff, m * m);
        return RootOfUnity(m * m, e);
    }
    // General table: no printed closed form applies; evaluate the product.
    return kappa_oracle(omega, q);
}

inline RootOfUnity kappa(const ThreeCocycle& omega, long a, long b, Element z) {
    return kappa(omega, KappaQuery{a, b, z});
}

inline RootOfUnity kappa_oracle(const ThreeCocycle& omega, long a, long b, Element z) {
    return kappa_oracle(omega, KappaQuery{a, b, z});
}

}  // namespace dwcalc
