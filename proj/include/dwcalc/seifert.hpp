#pragma once

#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwcalc/arith.hpp"
#include "dwcalc/cocycle.hpp"
#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/group.hpp"
#include "dwcalc/kappa.hpp"
#include "dwcalc/tqd.hpp"

namespace dwcalc {

struct Fiber {
    long a = 1;
    long b = 0;
    bool operator==(const Fiber&) const = default;
};

/// M_O(g; (a_1,b_1), ..., (a_n,b_n)): an orientable circle bundle over a
/// genus-g orientable surface with n exceptional fibers. Each (a_j, b_j)
/// must be coprime so the gluing matrix can be completed unimodularly.
class SeifertData {
public:
    SeifertData(int genus, std::vector<Fiber> fibers)
        : genus_(genus), fibers_(std::move(fibers)) {
        if (genus_ < 0)
            throw std::invalid_argument("SeifertData: genus must be non-negative");
        for (const auto& f : fibers_)
            if (std::gcd(f.a, f.b) != 1)
                throw std::invalid_argument("SeifertData: fiber coefficients must be coprime");
    }

    int genus() const { return genus_; }
    const std::vector<Fiber>& fibers() const { return fibers_; }
    int num_fibers() const { return static_cast<int>(fibers_.size()); }

    /// Grammar: g=<int>;(<a>,<b>)[,(<a>,<b>)]* with an optional empty list.
    static SeifertData parse(const std::string& text) {
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("SeifertData::parse: " + why + " in \"" + text + "\"");
        };
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
        };
        auto expect = [&](char c) {
            skip_ws();
            if (pos >= text.size() || text[pos] != c)
                fail(std::string("expected '") + c + "'");
            ++pos;
        };
        auto integer = [&]() -> long {
            skip_ws();
            std::size_t start = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
                ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
                fail("expected an integer");
            return std::stol(text.substr(start, pos - start));
        };
        expect('g');
        expect('=');
        long g = integer();
        expect(';');
        std::vector<Fiber> fibers;
        skip_ws();
        while (pos < text.size()) {
            if (!fibers.empty())
                expect(',');
            expect('(');
            long a = integer();
            expect(',');
            long b = integer();
            expect(')');
            fibers.push_back(Fiber{a, b});
            skip_ws();
        }
        return SeifertData(static_cast<int>(g), std::move(fibers));
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "g=" << genus_ << ";";
        for (std::size_t j = 0; j < fibers_.size(); ++j)
            os << (j ? "," : "") << "(" << fibers_[j].a << "," << fibers_[j].b << ")";
        return os.str();
    }

private:
    int genus_;
    std::vector<Fiber> fibers_;
};

enum class Method { Formula, Prime, Oracle };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Formula: return "formula";
        case Method::Prime: return "prime";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

struct DWResult {
    Cyclotomic value;
    std::complex<double> approx;
    Method method = Method::Formula;
};

inline DWResult make_result(Cyclotomic value, Method m) {
    std::complex<double> approx = value.to_complex();
    return DWResult{std::move(value), approx, m};
}

/// eta^w_rho(a,b) = sum_{z in G} kappa^w_{a,-b}(z) chi_rho(z^a, z^{-b}).
inline Cyclotomic eta(const FiniteGroup& g, const ThreeCocycle& w, const TQDCharacter& rho,
                      long a, long b) {
    Cyclotomic acc;
    for (Element z = 0; z < g.order(); ++z) {
        const Cyclotomic& cv = rho.values.at(g.power(z, a), g.power(z, -b));
        if (cv.is_zero())
            continue;
        acc += cv * kappa(w, a, -b, z).to_cyclotomic();
    }
    return acc;
}

/// Cyclic specialization evaluated from the quadratic exponent display:
/// eta^{w_l}_{h,s}(a,b) = sum_{z: az=h} zeta_{m^2}^{l a b z^2 - (2 l h + m s) b z}.
inline Cyclotomic eta_cyclic(int m, long level, int h, int s, long a, long b) {
    Cyclotomic acc;
    const long m2 = static_cast<long>(m) * m;
    for (long z = 0; z < m; ++z) {
        if (mod_norm(a * z - h, m) != 0)
            continue;
        __int128 e = static_cast<__int128>(level) * a * b * z * z -
                     (static_cast<__int128>(2) * level * mod_norm(h, m) + static_cast<long>(m) * s) * b * z;
        long er = static_cast<long>(((e % m2) + m2) % m2);
        acc += Cyclotomic::from_root(m2, er);
    }
    return acc;
}

/// Gauss-sum decomposition of eta_cyclic along d = gcd(a, m). Zero when d
/// does not divide h (the solution set is empty).
inline Cyclotomic eta_cyclic_decomposed(int m, long level, int h, int s, long a, long b) {
    h = static_cast<int>(mod_norm(h, m));
    const long d = (a == 0) ? m : std::gcd(std::abs(a), static_cast<long>(m));
    if (h % d != 0)
        return Cyclotomic();
    const long ap = a / d;
    const long mj = m / d;
    const long c = (mj > 1) ? mod_inverse(ap, mj) : 0;
    const long t = (ap * c - 1) / mj;
    const long hj = h / d;

    const long mmj = static_cast<long>(m) * mj;
    auto reduce = [](__int128 v, long mod) {
        long r = static_cast<long>(v % mod);
        return r < 0 ? r + mod : r;
    };
    Cyclotomic pre = Cyclotomic::from_root(mmj, reduce(-static_cast<__int128>(b) * level * c * hj * hj, mmj)) *
                     Cyclotomic::from_root(m, reduce(static_cast<__int128>(b) * c * hj *
                                                         (level * t * hj - s), m));
    Cyclotomic sum;
    for (long k = 0; k < d; ++k) {
        __int128 e = static_cast<__int128>(b) *
                     (level * ap * k * k + (2 * level * t * hj - s) * k);
        sum += Cyclotomic::from_root(d, reduce(e, d));
    }
    return pre * sum;
}

/// Main character formula:
/// Z = sum_rho (#G)^{2g-2} / (dim chi_rho)^{n+2g-2} * prod_j eta_rho(a_j, b_j).
inline DWResult dw_formula(const FiniteGroup& g, const ThreeCocycle& w, const SeifertData& sf) {
    auto family = character_family(g, w);  // throws for unsupported combinations
    const int n = sf.num_fibers();
    const long exp_dim = n + 2 * sf.genus() - 2;

    Rational order_pow(1);
    {
        long e = 2 * sf.genus() - 2;
        Rational base(g.order());
        for (long i = 0; i < std::abs(e); ++i)
            order_pow *= (e >= 0) ? base : Rational(1) / base;
    }

    Cyclotomic total;
    for (const auto& rho : family) {
        Cyclotomic term(order_pow);
        for (const auto& f : sf.fibers()) {
            if (term.is_zero())
                break;
            term *= eta(g, w, rho, f.a, f.b);
        }
        if (term.is_zero())
            continue;
        if (!rho.dim.is_rational())
            throw std::domain_error("dw_formula: irrational character dimension");
        Rational dim = rho.dim.rational_value();
        for (long i = 0; i < std::abs(exp_dim); ++i)
            term = (exp_dim >= 0) ? term / dim : term * dim;
        total += term;
    }
    return make_result(std::move(total), Method::Formula);
}

/// Legendre symbol (a/p) for an odd prime p.
inline int legendre(long a, long p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    long r = mod_norm(a, p);
    if (r == 0)
        return 0;
    long acc = 1, base = r, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1)
            acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

/// S_p(a) = sum_{k=0}^{p-1} zeta_p^{a k^2}, by direct summation (normative).
inline Cyclotomic gauss_sum(long p, long a) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("gauss_sum: p must be an odd prime");
    Cyclotomic acc;
    for (long k = 0; k < p; ++k)
        acc += Cyclotomic::from_root(p, mod_norm(a % p * (k * k % p), p));
    return acc;
}

/// Closed forms for Z^{omega_l} over Z/p, p an odd prime.
///
/// With n_0 = #{j : p | a_j} and n_0' = #{j : p || a_j}:
///   n_0 = 0:        Z = p^{2g-1} S_p(-l r)   if sum b_j c_j = r p  (a_j c_j = 1 mod p^2),
///                   Z = p^{2g-1}             if p does not divide the sum
///                   (the h = 0 term survives; validated against dw_formula),
///   l = 0, n_0 > 0: Z = p^{2g-2+n_0},
///   n_0' = n_0 > 0: Z = p^{2g-2} S_p(-sum b_j/(4 l a_j')) prod S_p(l a_j' b_j),
///   n_0' < n_0:     Z = p^{2g-2+n_0-n_0'} prod_{p || a_j} S_p(l a_j' b_j).
inline DWResult dw_prime_closed_form(long p, long level, const SeifertData& sf) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("dw_prime_closed_form: p must be an odd prime");
    if (level < 0 || level >= p)
        throw std::invalid_argument("dw_prime_closed_form: level out of range");

    auto p_pow = [&](long e) {
        Rational out(1), base(p);
        for (long i = 0; i < std::abs(e); ++i)
            out *= (e >= 0) ? base : Rational(1) / base;
        return out;
    };
    const long g2 = 2 * sf.genus();

    std::vector<Fiber> div;     // p | a_j
    std::vector<Fiber> sharp;   // p || a_j
    for (const auto& f : sf.fibers())
        if (f.a % p == 0) {
            div.push_back(f);
            if ((f.a / p) % p != 0)
                sharp.push_back(f);
        }

    if (div.empty()) {
        const long p2 = p * p;
        long sum = 0;
        for (const auto& f : sf.fibers()) {
            long c = mod_inverse(f.a, p2);
            sum = mod_norm(sum + mod_norm(f.b, p2) * c, p2);
        }
        if (sum % p != 0)
            return make_result(Cyclotomic(p_pow(g2 - 1)), Method::Prime);
        long r = (sum / p) % p;
        return make_result(gauss_sum(p, mod_norm(-level * r, p)) * p_pow(g2 - 1), Method::Prime);
    }
    if (level == 0)
        return make_result(Cyclotomic(p_pow(g2 - 2 + static_cast<long>(div.size()))),
                           Method::Prime);
    if (sharp.size() == div.size()) {
        long ssum = 0;
        Cyclotomic prod(Rational(1));
        for (const auto& f : div) {
            long ap = f.a / p;
            long inv = mod_inverse(mod_norm(4 * level * ap, p), p);
            ssum = mod_norm(ssum + mod_norm(f.b, p) * inv, p);
            prod *= gauss_sum(p, mod_norm(level * mod_norm(ap, p) % p * mod_norm(f.b, p), p));
        }
        prod *= gauss_sum(p, mod_norm(-ssum, p));
        return make_result(prod * p_pow(g2 - 2), Method::Prime);
    }
    Cyclotomic prod(Rational(1));
    for (const auto& f : sharp)
        prod *= gauss_sum(p, mod_norm(level * mod_norm(f.a / p, p) % p * mod_norm(f.b, p), p));
    return make_result(
        prod * p_pow(g2 - 2 + static_cast<long>(div.size()) - static_cast<long>(sharp.size())),
        Method::Prime);
}

}  // namespace dwcalc
