#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "dwcalc/cyclotomic.hpp"
#include "dwcalc/json_io.hpp"

using namespace dwcalc;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng, long max_order) {
    std::uniform_int_distribution<long> order_dist(1, max_order);
    std::uniform_int_distribution<int> coef_dist(-6, 6);
    std::uniform_int_distribution<int> den_dist(1, 4);
    long n = order_dist(rng);
    auto basis = cyclotomic_basis(n);
    Cyclotomic out;
    for (long i = 0; i < basis->deg; ++i) {
        int num = coef_dist(rng);
        if (num != 0)
            out += Cyclotomic::from_root(n, i) * Rational(num, den_dist(rng));
    }
    return out;
}

bool close(const std::complex<double>& a, const std::complex<double>& b, double tol) {
    return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("roots of unity reduce to canonical form") {
    CHECK(Cyclotomic::from_root(1, 0) == Cyclotomic(Rational(1)));
    // 1 + z3 + z3^2 = 0
    CHECK((Cyclotomic::from_root(3, 1) + Cyclotomic::from_root(3, 2)) ==
          Cyclotomic(Rational(-1)));
    // z4^2 = -1
    CHECK(Cyclotomic::from_root(4, 1) * Cyclotomic::from_root(4, 1) ==
          Cyclotomic(Rational(-1)));
    // exponent addition across a common order
    CHECK(Cyclotomic::from_root(9, 3) * Cyclotomic::from_root(9, 3) ==
          Cyclotomic::from_root(3, 2));
}

TEST_CASE("scaling and float evaluation") {
    Cyclotomic x = Cyclotomic::from_root(3, 1) * Rational(1, 3);
    auto z = x.to_complex();
    CHECK(close(z, {-1.0 / 6.0, std::sqrt(3.0) / 6.0}, 1e-9));

    CHECK(close(Cyclotomic(Rational(1)).to_complex(), {1.0, 0.0}, 1e-15));
    CHECK(close(Cyclotomic::from_root(4, 1).to_complex(), {0.0, 1.0}, 1e-12));
    Cyclotomic y = Cyclotomic(Rational(1)) + Cyclotomic::from_root(3, 1) * Rational(2);
    CHECK(close(y.to_complex(), {0.0, std::sqrt(3.0)}, 1e-9));
}

TEST_CASE("division by rationals") {
    Cyclotomic x = Cyclotomic::from_root(5, 2);
    CHECK(x / Rational(2) * Rational(2) == x);
    CHECK_THROWS_AS(x / Rational(0), std::domain_error);
}

TEST_CASE("conjugation is the inverse-root Galois map") {
    CHECK(Cyclotomic::from_root(5, 1).conjugate() == Cyclotomic::from_root(5, 4));
    CHECK(Cyclotomic(Rational(7, 3)).conjugate() == Cyclotomic(Rational(7, 3)));

    std::mt19937 rng(123);
    for (int i = 0; i < 60; ++i) {
        Cyclotomic x = random_cyclotomic(rng, 24);
        CHECK(close(x.conjugate().to_complex(), std::conj(x.to_complex()), 1e-9));
    }
}

TEST_CASE("additive inverse and ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        Cyclotomic a = random_cyclotomic(rng, 30);
        Cyclotomic b = random_cyclotomic(rng, 30);
        Cyclotomic c = random_cyclotomic(rng, 30);
        CHECK((a + (-a)).is_zero());
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("canonicity: exact equality matches float proximity at desk scale") {
    std::mt19937 rng(99);
    std::vector<Cyclotomic> xs;
    for (int i = 0; i < 40; ++i)
        xs.push_back(random_cyclotomic(rng, 16));
    for (const auto& a : xs)
        for (const auto& b : xs) {
            bool exact = (a == b);
            bool approx = close(a.to_complex(), b.to_complex(), 1e-7);
            CHECK(exact == approx);
        }
}

TEST_CASE("cross-order equality through the lcm embedding") {
    // z6^2 = z3
    CHECK(Cyclotomic::from_root(6, 2) == Cyclotomic::from_root(3, 1));
    CHECK(Cyclotomic::from_root(6, 3) == Cyclotomic(Rational(-1)));
    CHECK(Cyclotomic::from_root(12, 3) == Cyclotomic::from_root(4, 1));
    // mixed-order arithmetic lands in the lcm field
    Cyclotomic s = Cyclotomic::from_root(4, 1) * Cyclotomic::from_root(3, 1);
    CHECK(s == Cyclotomic::from_root(12, 7));
}

TEST_CASE("all roots lie on the unit circle") {
    for (long n = 1; n <= 40; ++n)
        for (long k = 0; k < n; ++k) {
            double mag = std::abs(Cyclotomic::from_root(n, k).to_complex());
            CHECK(std::abs(mag - 1.0) < 1e-12);
        }
}

TEST_CASE("RootOfUnity multiplies by adding exponents and promotes losslessly") {
    RootOfUnity a(8, 3), b(8, 7);
    CHECK(a * b == RootOfUnity(8, 10));
    CHECK(RootOfUnity(4, 2) == RootOfUnity(2, 1));
    CHECK(a.inverse() * a == RootOfUnity());
    CHECK(a.pow(8) == RootOfUnity());

    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        long n = 1 + rng() % 20, k = rng() % (2 * n);
        RootOfUnity r(n, k);
        CHECK(r.to_cyclotomic() == Cyclotomic::from_root(n, k));
        RootOfUnity s(1 + rng() % 20, rng() % 40);
        CHECK((r * s).to_cyclotomic() == r.to_cyclotomic() * s.to_cyclotomic());
    }
}

TEST_CASE("JSON round trip is exact") {
    std::mt19937 rng(321);
    for (int i = 0; i < 30; ++i) {
        Cyclotomic x = random_cyclotomic(rng, 20);
        nlohmann::json j = cyclotomic_to_json(x);
        Cyclotomic back = cyclotomic_from_json(j);
        CHECK(back == x);
        CHECK(back.order() == x.order());
        CHECK(cyclotomic_to_json(back) == j);
    }
    CHECK(rational_from_string("-3/6") == Rational(-1, 2));
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}
