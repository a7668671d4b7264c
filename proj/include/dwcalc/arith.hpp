#pragma once

#include <numeric>
#include <stdexcept>

namespace dwcalc {

/// Least non-negative residue of a modulo m (m > 0).
inline long mod_norm(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long mod_mul(long a, long b, long m) {
    return mod_norm(mod_norm(a, m) * mod_norm(b, m), m);
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline long mod_inverse(long a, long m) {
    long t = 0, new_t = 1;
    long r = m, new_r = mod_norm(a, m);
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw std::domain_error("mod_inverse: argument not invertible");
    return mod_norm(t, m);
}

inline bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0)
        return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace dwcalc
