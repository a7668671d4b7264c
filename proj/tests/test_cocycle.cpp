#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dwcalc/cocycle.hpp"
#include "dwcalc/json_io.hpp"

using namespace dwcalc;

TEST_CASE("omega_l values and normalization") {
    ThreeCocycle w2 = omega_l(2, 1);
    CHECK(w2(1, 1, 1) == RootOfUnity(2, 1));  // zeta_2 = -1

    ThreeCocycle w3 = omega_l(3, 2);
    CHECK(w3(2, 2, 2) == RootOfUnity(3, 1));  // zeta_3^{2*2*floor(4/3)}

    for (int m = 1; m <= 6; ++m)
        for (long l = 0; l < m; ++l) {
            ThreeCocycle w = omega_l(m, l);
            for (Element y = 0; y < m; ++y)
                for (Element z = 0; z < m; ++z) {
                    CHECK(w(0, y, z).is_one());
                    CHECK(w(y, 0, z).is_one());
                    CHECK(w(y, z, 0).is_one());
                }
        }
}

TEST_CASE("omega_l satisfies the cocycle identity exhaustively") {
    for (int m = 1; m <= 8; ++m)
        for (long l = 0; l < m; ++l)
            CHECK_NOTHROW(omega_l(m, l).validate());
}

TEST_CASE("validation rejects corrupted tables") {
    FiniteGroup g = FiniteGroup::cyclic(3);
    std::vector<RootOfUnity> values(27);
    values[(1 * 3 + 1) * 3 + 1] = RootOfUnity(3, 1);  // breaks the identity
    CHECK_THROWS_AS(ThreeCocycle::from_table(g, values, true), std::invalid_argument);

    std::vector<RootOfUnity> bad_norm(27);
    bad_norm[(0 * 3 + 1) * 3 + 1] = RootOfUnity(3, 1);  // not normalized
    CHECK_THROWS_AS(ThreeCocycle::from_table(g, bad_norm, true), std::invalid_argument);
}

TEST_CASE("gamma at the identity and for the trivial cocycle") {
    ThreeCocycle w = omega_l(5, 3);
    for (Element x1 = 0; x1 < 5; ++x1)
        for (Element x2 = 0; x2 < 5; ++x2)
            CHECK(w.gamma(0, x1, x2).is_one());
    ThreeCocycle t = ThreeCocycle::trivial(FiniteGroup::cyclic(5));
    for (Element h = 0; h < 5; ++h)
        CHECK(t.gamma(h, 2, 3).is_one());
    // Cyclic(2), omega_1: gamma_1(1,1) = w(1,1,1)^2 / w(1,1,1) = -1
    CHECK(omega_l(2, 1).gamma(1, 1, 1) == RootOfUnity(2, 1));
}

TEST_CASE("theta normalization and the cyclic closed form") {
    ThreeCocycle w = omega_l(4, 2);
    for (Element h1 = 0; h1 < 4; ++h1)
        for (Element h2 = 0; h2 < 4; ++h2)
            CHECK(w.theta(0, h1, h2).is_one());
    CHECK(omega_l(2, 1).theta(1, 1, 1) == RootOfUnity(2, 1));

    // theta^{w_l}_h(x,y) = zeta_m^{l h floor((x+y)/m)}, exhaustive m <= 12
    for (int m = 1; m <= 12; ++m)
        for (long l = 0; l < m; ++l) {
            ThreeCocycle wl = omega_l(m, l);
            for (Element h = 0; h < m; ++h)
                for (Element x = 0; x < m; ++x)
                    for (Element y = 0; y < m; ++y)
                        CHECK(wl.theta(h, x, y) == RootOfUnity(m, l * h * ((x + y) / m)));
        }
}

TEST_CASE("gamma is symmetric for the cyclic family") {
    for (int m = 1; m <= 12; ++m)
        for (long l = 0; l < m; ++l) {
            ThreeCocycle w = omega_l(m, l);
            for (Element h = 0; h < m; ++h)
                for (Element x = 0; x < m; ++x)
                    for (Element y = 0; y < m; ++y)
                        CHECK(w.gamma(h, x, y) == w.gamma(h, y, x));
        }
}

TEST_CASE("alpha_l trivializes theta as a coboundary") {
    CHECK(alpha_l(3, 0, 1, 2).is_one());
    CHECK(alpha_l(3, 1, 1, 2) == RootOfUnity(9, 2));

    // omega_l(h,x,y) = alpha_h(x) alpha_h(y) / alpha_h(x+y), m <= 12
    for (int m = 1; m <= 12; ++m)
        for (long l = 0; l < m; ++l) {
            ThreeCocycle w = omega_l(m, l);
            FiniteGroup g = FiniteGroup::cyclic(m);
            for (Element h = 0; h < m; ++h)
                for (Element x = 0; x < m; ++x)
                    for (Element y = 0; y < m; ++y) {
                        RootOfUnity rhs = alpha_l(m, l, h, x) * alpha_l(m, l, h, y) *
                                          alpha_l(m, l, h, g.mul(x, y)).inverse();
                        CHECK(w(h, x, y) == rhs);
                    }
        }
}

TEST_CASE("restriction_level on generators and frozen subgroup values") {
    for (int m = 1; m <= 12; ++m)
        for (long l = 0; l < m; ++l) {
            ThreeCocycle w = omega_l(m, l);
            for (Element z = 1; z < m; ++z)
                if (std::gcd<long, long>(z, m) == 1)
                    CHECK(w.restriction_level(z) == l);
        }

    // trivial cocycle restricts to level 0 everywhere
    ThreeCocycle t = ThreeCocycle::trivial(FiniteGroup::cyclic(8));
    for (Element z = 0; z < 8; ++z)
        CHECK(t.restriction_level(z) == 0);

    // Cyclic(6), z = 2 (order 3): level l mod 3; z = 3 (order 2): l mod 2.
    // Values frozen after the coboundary-invariance fuzz below.
    for (long l = 0; l < 6; ++l) {
        ThreeCocycle w = omega_l(6, l);
        CHECK(w.restriction_level(2) == l % 3);
        CHECK(w.restriction_level(4) == l % 3);
        CHECK(w.restriction_level(3) == l % 2);
    }
}

TEST_CASE("restriction_level is coboundary invariant") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + static_cast<int>(rng() % 7);  // 2..8
        long l = static_cast<long>(rng() % static_cast<unsigned>(m));
        ThreeCocycle w = omega_l(m, l);
        std::vector<RootOfUnity> beta(static_cast<std::size_t>(m) * m);
        for (Element x = 1; x < m; ++x)
            for (Element y = 1; y < m; ++y)
                beta[static_cast<std::size_t>(x) * m + y] =
                    RootOfUnity(static_cast<long>(m) * m, static_cast<long>(rng() % (m * m)));
        ThreeCocycle wp = multiply_by_coboundary(w, beta);
        CHECK(wp.is_valid());
        for (Element z = 0; z < m; ++z)
            CHECK(wp.restriction_level(z) == w.restriction_level(z));
    }
}

TEST_CASE("restriction_level fails loudly on non-cocycle tables") {
    // a normalized table that is not a cocycle: the telescoping product at a
    // generator is not an m-th root of unity
    FiniteGroup g = FiniteGroup::cyclic(2);
    std::vector<RootOfUnity> values(8);
    values[(1 * 2 + 1) * 2 + 1] = RootOfUnity(3, 1);
    ThreeCocycle w = ThreeCocycle::from_table(g, values, false);
    CHECK_THROWS_AS(w.restriction_level(1), std::domain_error);
}

TEST_CASE("cocycle file round trip") {
    nlohmann::json j = {
        {"root_order", 2},
        {"values", {{{0, 0}, {0, 0}}, {{0, 0}, {0, 1}}}},
    };
    FiniteGroup g = FiniteGroup::cyclic(2);
    ThreeCocycle w = cocycle_from_json(g, j);
    CHECK(w(1, 1, 1) == RootOfUnity(2, 1));
    CHECK(w.same_cocycle(omega_l(2, 1)));

    nlohmann::json bad = {{"root_order", 2}, {"values", {{{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}}}};
    CHECK_THROWS_AS(cocycle_from_json(g, bad), std::invalid_argument);
}
