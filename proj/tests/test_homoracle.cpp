#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "dwcalc/homoracle.hpp"
#include "dwcalc/seifert.hpp"

using namespace dwcalc;

namespace {

FiniteGroup make_s3() {
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto compose = [&](int i, int j) {
        std::array<int, 3> out{};
        for (int x = 0; x < 3; ++x)
            out[x] = perms[i][perms[j][x]];
        for (int t = 0; t < 6; ++t)
            if (perms[t] == out)
                return t;
        return -1;
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            table[i][j] = compose(i, j);
    return FiniteGroup::cayley_table(table);
}

Int ipow(long base, int e) {
    Int out = 1;
    for (int i = 0; i < e; ++i)
        out *= base;
    return out;
}

}  // namespace

TEST_CASE("presentation is derived deterministically") {
    SeifertData sf(2, {Fiber{2, 1}, Fiber{3, -1}});
    SeifertPresentation pres = SeifertPresentation::from(sf);
    CHECK(pres.num_generators() == 2 + 4 + 1);
    CHECK(pres.relations_string() ==
          "h central; x1^2 h^1 = e; x2^3 h^-1 = e; x1 x2 [u1,v1] [u2,v2] = e");
}

TEST_CASE("S^3 admits only the trivial homomorphism") {
    SeifertData s3(0, {Fiber{1, 1}});
    for (int m = 1; m <= 8; ++m)
        CHECK(count_homs(FiniteGroup::cyclic(m), s3) == 1);
    CHECK(count_homs(make_s3(), s3) == 1);
    CHECK(count_homs(FiniteGroup::abelian_product({2, 4}), s3) == 1);
}

TEST_CASE("circle bundles over surfaces: m^{2g+1} homomorphisms") {
    for (int m = 2; m <= 5; ++m)
        for (int g = 0; g <= 2; ++g)
            CHECK(count_homs(FiniteGroup::cyclic(m), SeifertData(g, {})) == ipow(m, 2 * g + 1));
}

TEST_CASE("single-fiber lens spaces count gcd(b, m)") {
    for (int m = 2; m <= 8; ++m)
        for (long b : {1L, 2L, 3L, 5L})
            for (long a : {1L, -1L}) {
                if (std::gcd(a, b) != 1)
                    continue;
                Int want(std::gcd(b, static_cast<long>(m)));
                CHECK(count_homs(FiniteGroup::cyclic(m), SeifertData(0, {Fiber{a, b}})) == want);
            }
}

TEST_CASE("convolution counting equals naive enumeration") {
    std::vector<SeifertData> cases = {
        SeifertData(0, {}),
        SeifertData(1, {}),
        SeifertData(0, {Fiber{2, 1}}),
        SeifertData(0, {Fiber{2, 1}, Fiber{3, -2}}),
        SeifertData(1, {Fiber{3, 1}}),
        SeifertData(1, {Fiber{2, -1}, Fiber{1, 3}}),
    };
    std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
                                       FiniteGroup::abelian_product({2, 2}), make_s3()};
    for (const auto& g : groups)
        for (const auto& sf : cases) {
            if (sf.genus() + sf.num_fibers() > 3 && g.order() > 6)
                continue;
            CHECK(count_homs(g, sf) == count_homs_naive(g, sf));
        }
}

TEST_CASE("count is invariant under the symmetry substitutions") {
    std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(8),
                                       FiniteGroup::abelian_product({2, 4}), make_s3()};
    std::vector<SeifertData> cases = {
        SeifertData(0, {Fiber{2, 3}, Fiber{5, 1}}),
        SeifertData(1, {Fiber{3, 2}}),
        SeifertData(2, {Fiber{4, 1}, Fiber{1, 0}}),
    };
    for (const auto& g : groups)
        for (const auto& sf : cases) {
            Int base = count_homs(g, sf);

            // negate every b_j (h -> h^{-1} is a bijection on solutions)
            std::vector<Fiber> negb;
            for (auto f : sf.fibers())
                negb.push_back(Fiber{f.a, -f.b});
            CHECK(count_homs(g, SeifertData(sf.genus(), negb)) == base);

            // permute fibers
            std::vector<Fiber> perm(sf.fibers().rbegin(), sf.fibers().rend());
            CHECK(count_homs(g, SeifertData(sf.genus(), perm)) == base);

            // (a_j, b_j) -> (-a_j, -b_j), x_j -> x_j^{-1}
            std::vector<Fiber> negab;
            for (auto f : sf.fibers())
                negab.push_back(Fiber{-f.a, -f.b});
            CHECK(count_homs(g, SeifertData(sf.genus(), negab)) == base);
        }
}

TEST_CASE("dw_untwisted agrees with dw_formula on abelian groups") {
    std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(6),
                                       FiniteGroup::abelian_product({2, 2}),
                                       FiniteGroup::abelian_product({2, 4})};
    std::vector<SeifertData> cases = {
        SeifertData(0, {Fiber{1, 1}}),
        SeifertData(0, {Fiber{2, 1}, Fiber{3, 1}}),
        SeifertData(1, {Fiber{2, -1}}),
        SeifertData(2, {}),
        SeifertData(0, {Fiber{0, 1}, Fiber{3, 2}}),
    };
    for (const auto& g : groups) {
        ThreeCocycle t = ThreeCocycle::trivial(g);
        for (const auto& sf : cases) {
            DWResult oracle = dw_untwisted(g, sf);
            DWResult formula = dw_formula(g, t, sf);
            CHECK(oracle.value == formula.value);
            CHECK(oracle.method == Method::Oracle);
            CHECK(oracle.value.is_rational());
        }
    }
    // S^3: Z = 1/#G for every group, including non-abelian ones
    CHECK(dw_untwisted(make_s3(), SeifertData(0, {Fiber{1, 1}})).value ==
          Cyclotomic(Rational(1, 6)));
}

TEST_CASE("budget guard refuses oversized instances") {
    SeifertData sf(2, {Fiber{2, 1}});
    CHECK_THROWS_AS(count_homs(FiniteGroup::cyclic(12), sf, 10), BudgetExceeded);
    CHECK(hom_count_work_estimate(FiniteGroup::cyclic(12), sf) == 12LL * 12 * 12 * 3);
}
