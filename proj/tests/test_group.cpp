#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <numeric>

#include "dwcalc/group.hpp"
#include "dwcalc/json_io.hpp"

using namespace dwcalc;

namespace {

// S3 as permutations of {0,1,2}; identity first so it sits at index 0.
FiniteGroup make_s3() {
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto compose = [&](int i, int j) {  // (p_i . p_j)(x) = p_i(p_j(x))
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

}  // namespace

TEST_CASE("cyclic arithmetic") {
    FiniteGroup g = FiniteGroup::cyclic(6);
    CHECK(g.power(2, 3) == 0);
    CHECK(g.mul(4, 5) == 3);
    CHECK(g.power(5, -1) == 1);
    for (Element x = 0; x < 6; ++x)
        CHECK(g.mul(x, g.inv(x)) == g.identity());
    CHECK_THROWS_AS(g.mul(0, 6), std::out_of_range);
}

TEST_CASE("element orders") {
    CHECK(FiniteGroup::cyclic(9).element_order(3) == 3);
    CHECK(FiniteGroup::cyclic(9).element_order(0) == 1);
    FiniteGroup ab = FiniteGroup::abelian_product({2, 4});
    Element e11 = ab.from_coordinates({1, 1});
    CHECK(ab.element_order(e11) == 4);  // lcm of component orders
    CHECK(ab.exponent() == 4);
}

TEST_CASE("abelian product encoding agrees with coordinates") {
    FiniteGroup ab = FiniteGroup::abelian_product({2, 4});
    CHECK(ab.order() == 8);
    for (Element g = 0; g < 8; ++g)
        CHECK(ab.from_coordinates(ab.coordinates(g)) == g);
    Element a = ab.from_coordinates({1, 2});
    Element b = ab.from_coordinates({1, 3});
    CHECK(ab.mul(a, b) == ab.from_coordinates({0, 1}));
}

TEST_CASE("conjugacy data of cyclic groups is singletons") {
    FiniteGroup g = FiniteGroup::cyclic(5);
    const auto& cd = g.conjugacy_data();
    CHECK(cd.classes.size() == 5);
    for (const auto& cent : cd.centralizers)
        CHECK(cent.size() == 5);
}

TEST_CASE("S3 structure") {
    FiniteGroup s3 = make_s3();
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());

    const auto& cd = s3.conjugacy_data();
    std::vector<std::size_t> sizes;
    for (const auto& c : cd.classes)
        sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

    // a transposition squares to the identity; its centralizer has order 2
    Element transposition = 0;
    for (Element g = 1; g < 6; ++g)
        if (s3.element_order(g) == 2)
            transposition = g;
    CHECK(s3.power(transposition, 2) == 0);
    CHECK(s3.centralizer(transposition).size() == 2);

    // classes partition the group and |class| * |centralizer| = #G
    std::size_t total = 0;
    for (std::size_t i = 0; i < cd.classes.size(); ++i) {
        total += cd.classes[i].size();
        CHECK(cd.classes[i].size() * cd.centralizers[i].size() == 6);
    }
    CHECK(total == 6);

    // commuting pairs by enumeration: sum_x |C(x)| = 6 + 3*2 + 2*3 = 18
    auto pairs = s3.commuting_pairs();
    CHECK(pairs.size() == 18);
    std::size_t by_centralizers = 0;
    for (Element x = 0; x < 6; ++x)
        by_centralizers += s3.centralizer(x).size();
    CHECK(pairs.size() == by_centralizers);
    for (Element h = 0; h < 6; ++h)
        CHECK(std::count(pairs.begin(), pairs.end(), std::make_pair(0, h)) == 1);
}

TEST_CASE("cyclic group wrapped as a Cayley table is indistinguishable") {
    FiniteGroup c6 = FiniteGroup::cyclic(6);
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            table[i][j] = (i + j) % 6;
    FiniteGroup t6 = FiniteGroup::cayley_table(table);
    CHECK(t6.same_group(c6));
    CHECK(t6.commuting_pairs() == c6.commuting_pairs());
    const auto& a = c6.conjugacy_data();
    const auto& b = t6.conjugacy_data();
    CHECK(a.classes == b.classes);
    CHECK(a.centralizers == b.centralizers);
}

TEST_CASE("class sizes sum to the order across all constructions") {
    for (const FiniteGroup& g :
         {FiniteGroup::cyclic(8), FiniteGroup::abelian_product({2, 2, 3}), make_s3()}) {
        std::size_t total = 0;
        for (const auto& c : g.conjugacy_data().classes)
            total += c.size();
        CHECK(total == static_cast<std::size_t>(g.order()));
        for (const auto& cent : g.conjugacy_data().centralizers)
            CHECK(g.order() % cent.size() == 0);
    }
}

TEST_CASE("cayley table validation rejects malformed input") {
    // identity not at index 0
    CHECK_THROWS_AS(FiniteGroup::cayley_table({{1, 0}, {0, 1}}), std::invalid_argument);
    // not a Latin square
    CHECK_THROWS_AS(FiniteGroup::cayley_table({{0, 0}, {0, 0}}), std::invalid_argument);
    // non-associative loop of order 5 (smallest examples live here)
    std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::cayley_table(loop), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup::cayley_table({{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("group JSON formats") {
    CHECK(group_from_json({{"type", "cyclic"}, {"m", 9}}).order() == 9);
    FiniteGroup ab = group_from_json({{"type", "abelian"}, {"factors", {2, 4}}});
    CHECK(ab.order() == 8);
    nlohmann::json tj = {{"type", "table"},
                         {"order", 2},
                         {"table", {{0, 1}, {1, 0}}}};
    CHECK(group_from_json(tj).order() == 2);
    CHECK_THROWS_AS(group_from_json({{"type", "frobnicate"}}), std::invalid_argument);
}
