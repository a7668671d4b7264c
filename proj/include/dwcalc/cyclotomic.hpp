#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dwcalc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long lcm_long(long a, long b) {
    return a / std::gcd(a, b) * b;
}

/// Reduction data for the power basis of Q(zeta_n): the cyclotomic
/// polynomial Phi_n and the expansion of x^k in the basis x^0..x^{deg-1}
/// for every exponent the arithmetic can produce (k < max(n, 2 deg - 1)).
struct CyclotomicBasis {
    long n = 1;
    long deg = 1;
    std::vector<Int> phi;                  // monic, size deg + 1
    std::vector<std::vector<Int>> powers;  // powers[k] = x^k mod Phi_n
};

namespace detail {

// Exact division of integer polynomials, used to build Phi_n from
// x^n - 1 = prod_{d | n} Phi_d.
inline std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    if (b.empty() || b.back() == 0)
        throw std::invalid_argument("poly_div_exact: bad divisor");
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        Int c = a[i] / b.back();
        q[i - (b.size() - 1)] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[i - (b.size() - 1) + j] -= c * b[j];
    }
    for (const Int& c : a)
        if (c != 0)
            throw std::logic_error("poly_div_exact: nonzero remainder");
    while (q.size() > 1 && q.back() == 0)
        q.pop_back();
    return q;
}

inline std::vector<Int> cyclotomic_polynomial(long n, std::map<long, std::vector<Int>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<Int> p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0)
            p = poly_div_exact(std::move(p), cyclotomic_polynomial(d, cache));
    cache[n] = p;
    return p;
}

}  // namespace detail

/// Shared, lazily-filled basis cache. Fills are idempotent, so concurrent
/// computation of the same order is harmless; a thread-local mirror keeps
/// hot lookups off the shared mutex.
inline std::shared_ptr<const CyclotomicBasis> cyclotomic_basis(long n) {
    static std::mutex mtx;
    static std::map<long, std::shared_ptr<const CyclotomicBasis>> cache;
    static std::map<long, std::vector<Int>> phi_cache;
    thread_local std::map<long, std::shared_ptr<const CyclotomicBasis>> local;
    if (n < 1)
        throw std::invalid_argument("cyclotomic_basis: order must be positive");
    auto lit = local.find(n);
    if (lit != local.end())
        return lit->second;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) {
        local[n] = it->second;
        return it->second;
    }

    auto basis = std::make_shared<CyclotomicBasis>();
    basis->n = n;
    basis->phi = detail::cyclotomic_polynomial(n, phi_cache);
    basis->deg = static_cast<long>(basis->phi.size()) - 1;
    const long deg = basis->deg;
    const long rows = std::max(n, 2 * deg - 1);
    basis->powers.reserve(rows);
    for (long k = 0; k < rows; ++k) {
        if (k < deg) {
            std::vector<Int> row(deg, Int(0));
            row[k] = 1;
            basis->powers.push_back(std::move(row));
        } else {
            // x * powers[k-1], then cancel the degree-deg term against Phi_n.
            std::vector<Int> row(deg, Int(0));
            const std::vector<Int>& prev = basis->powers[k - 1];
            for (long i = 0; i + 1 < deg; ++i)
                row[i + 1] = prev[i];
            Int lead = prev[deg - 1];
            if (lead != 0)
                for (long i = 0; i < deg; ++i)
                    row[i] -= lead * basis->phi[i];
            basis->powers.push_back(std::move(row));
        }
    }
    cache[n] = basis;
    local[n] = basis;
    return basis;
}

/// Exact element of Q(zeta_N) in the power basis modulo Phi_N.
/// Values are immutable in spirit: all arithmetic returns new values, and
/// equality is canonical after embedding both sides into the lcm order.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

    explicit Cyclotomic(Rational r) : order_(1), coeffs_(1, std::move(r)) {}
    explicit Cyclotomic(long v) : order_(1), coeffs_(1, Rational(v)) {}

    /// zeta_N^k in canonical form.
    static Cyclotomic from_root(long n, long k) {
        if (n < 1)
            throw std::invalid_argument("Cyclotomic::from_root: order must be positive");
        auto basis = cyclotomic_basis(n);
        long e = ((k % n) + n) % n;
        Cyclotomic out;
        out.order_ = n;
        out.coeffs_.assign(basis->deg, Rational(0));
        for (long i = 0; i < basis->deg; ++i)
            out.coeffs_[i] = Rational(basis->powers[e][i]);
        return out;
    }

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    /// True when the value lies in Q, i.e. only the basis element zeta^0
    /// carries a coefficient.
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational())
            throw std::domain_error("Cyclotomic::rational_value: value is irrational");
        return coeffs_[0];
    }

    /// Re-expresses the value in Q(zeta_m) for any multiple m of the order.
    Cyclotomic embedded(long m) const {
        if (m % order_ != 0)
            throw std::invalid_argument("Cyclotomic::embedded: target order not a multiple");
        if (m == order_)
            return *this;
        auto basis = cyclotomic_basis(m);
        Cyclotomic out;
        out.order_ = m;
        out.coeffs_.assign(basis->deg, Rational(0));
        const long step = m / order_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            const auto& row = basis->powers[static_cast<long>(i) * step];
            for (long j = 0; j < basis->deg; ++j)
                if (row[j] != 0)
                    out.coeffs_[j] += coeffs_[i] * row[j];
        }
        return out;
    }

    Cyclotomic operator+(const Cyclotomic& rhs) const {
        long m = lcm_long(order_, rhs.order_);
        Cyclotomic a = embedded(m), b = rhs.embedded(m);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            a.coeffs_[i] += b.coeffs_[i];
        return a;
    }

    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    Cyclotomic operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

    Cyclotomic operator*(const Cyclotomic& rhs) const {
        long m = lcm_long(order_, rhs.order_);
        Cyclotomic a = embedded(m), b = rhs.embedded(m);
        auto basis = cyclotomic_basis(m);
        Cyclotomic out;
        out.order_ = m;
        out.coeffs_.assign(basis->deg, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0)
                    continue;
                Rational c = a.coeffs_[i] * b.coeffs_[j];
                const auto& row = basis->powers[i + j];
                for (long t = 0; t < basis->deg; ++t)
                    if (row[t] != 0)
                        out.coeffs_[t] += c * row[t];
            }
        }
        return out;
    }

    Cyclotomic operator*(const Rational& r) const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_)
            c *= r;
        return out;
    }

    Cyclotomic operator/(const Rational& r) const {
        if (r == 0)
            throw std::domain_error("Cyclotomic::operator/: division by zero");
        return *this * Rational(denominator(r), numerator(r));
    }

    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

    /// Galois map zeta_N -> zeta_N^{-1}; complex conjugation under to_complex.
    Cyclotomic conjugate() const {
        auto basis = cyclotomic_basis(order_);
        Cyclotomic out;
        out.order_ = order_;
        out.coeffs_.assign(basis->deg, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            long e = (order_ - static_cast<long>(i)) % order_;
            const auto& row = basis->powers[e];
            for (long t = 0; t < basis->deg; ++t)
                if (row[t] != 0)
                    out.coeffs_[t] += coeffs_[i] * row[t];
        }
        return out;
    }

    bool operator==(const Cyclotomic& rhs) const {
        long m = lcm_long(order_, rhs.order_);
        return embedded(m).coeffs_ == rhs.embedded(m).coeffs_;
    }
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    std::complex<double> to_complex() const {
        std::complex<double> acc(0.0, 0.0);
        const double tau = 6.283185307179586476925286766559;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            double c = coeffs_[i].convert_to<double>();
            double ang = tau * static_cast<double>(i) / static_cast<double>(order_);
            acc += std::complex<double>(c * std::cos(ang), c * std::sin(ang));
        }
        return acc;
    }

    /// Compact human-readable form, e.g. "1/3 + 2/3*z3^2".
    std::string to_string() const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            Rational c = coeffs_[i];
            if (first) {
                if (c < 0) {
                    os << "-";
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0)
                    c = -c;
            }
            first = false;
            bool unit_coeff = (c == 1) && i != 0;
            if (!unit_coeff) {
                os << numerator(c);
                if (denominator(c) != 1)
                    os << "/" << denominator(c);
            }
            if (i != 0) {
                if (!unit_coeff)
                    os << "*";
                os << "z" << order_;
                if (i != 1)
                    os << "^" << i;
            }
        }
        return os.str();
    }

private:
    long order_;
    std::vector<Rational> coeffs_;  // length deg Phi_{order_}
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& x) { return x * r; }

/// A pure phase zeta_N^k, kept in lowest terms (gcd(k, N) factored out).
/// Promotes losslessly to Cyclotomic; multiplication adds exponents.
class RootOfUnity {
public:
    RootOfUnity() : order_(1), exponent_(0) {}

    RootOfUnity(long order, long exponent) {
        if (order < 1)
            throw std::invalid_argument("RootOfUnity: order must be positive");
        exponent = ((exponent % order) + order) % order;
        long g = std::gcd(exponent, order);
        if (exponent == 0) {
            order_ = 1;
            exponent_ = 0;
        } else {
            order_ = order / g;
            exponent_ = exponent / g;
        }
    }

    long order() const { return order_; }
    long exponent() const { return exponent_; }
    bool is_one() const { return order_ == 1; }

    RootOfUnity operator*(const RootOfUnity& rhs) const {
        long m = lcm_long(order_, rhs.order_);
        return RootOfUnity(m, exponent_ * (m / order_) + rhs.exponent_ * (m / rhs.order_));
    }

    RootOfUnity inverse() const { return RootOfUnity(order_, order_ - exponent_); }
    RootOfUnity conjugate() const { return inverse(); }

    RootOfUnity pow(long k) const {
        long e = ((exponent_ * (k % order_)) % order_ + order_) % order_;
        return RootOfUnity(order_, e);
    }

    bool operator==(const RootOfUnity& rhs) const {
        return order_ == rhs.order_ && exponent_ == rhs.exponent_;
    }
    bool operator!=(const RootOfUnity& rhs) const { return !(*this == rhs); }

    Cyclotomic to_cyclotomic() const { return Cyclotomic::from_root(order_, exponent_); }

    std::complex<double> to_complex() const {
        const double tau = 6.283185307179586476925286766559;
        double ang = tau * static_cast<double>(exponent_) / static_cast<double>(order_);
        return {std::cos(ang), std::sin(ang)};
    }

    std::string to_string() const {
        if (order_ == 1)
            return "1";
        if (order_ == 2)
            return "-1";
        std::ostringstream os;
        os << "z" << order_;
        if (exponent_ != 1)
            os << "^" << exponent_;
        return os.str();
    }

private:
    long order_;
    long exponent_;
};

}  // namespace dwcalc
