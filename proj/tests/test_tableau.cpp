#include "doctest.h"

#include "big_example.hpp"

#include "gapless/tableau.hpp"

using namespace gapless;

namespace {

IGLT T(std::vector<int> shape, std::vector<std::vector<int>> rows) { return validate(Partition(shape), rows); }

}  // namespace

TEST_CASE("validate") {
    IGLT t = T({2, 2}, {{1, 2}, {2, 3}});
    CHECK(t.max_entry == 3);
    CHECK(T({1}, {{1}}).max_entry == 1);
    try {
        T({2, 2}, {{1, 3}, {2, 2}});
        FAIL("expected a TableauError");
    } catch (const TableauError& e) {
        CHECK(e.kind == TableauError::NotIncreasing);
        CHECK(e.cell.row == 2);
    }
    try {
        T({2, 1}, {{1, 3}, {4}});
        FAIL("expected a TableauError");
    } catch (const TableauError& e) {
        CHECK(e.kind == TableauError::GapAt);
        CHECK(e.value == 2);
    }
    CHECK_THROWS_AS(T({2, 2}, {{1, 2}, {3}}), TableauError);
    CHECK_FALSE(is_iglt(Partition({2}), {{2, 1}}));
}

TEST_CASE("lookup at the boundary") {
    IGLT t = T({2, 1}, {{1, 2}, {3}});
    CHECK(t.lookup(1, 2).kind == Entry::Val);
    CHECK(t.lookup(2, 2).kind == Entry::PosInf);
    CHECK(t.lookup(0, 1).kind == Entry::NegInf);
    CHECK(t.lookup(1, 0).kind == Entry::NegInf);
    CHECK(t.lookup(2, 2).ge(100));
    CHECK(t.lookup(0, 2).lt(-100));
}

TEST_CASE("enumerate_iglt") {
    auto m3 = enumerate_iglt(Partition({2, 2}), 3);
    REQUIRE(m3.size() == 1);
    CHECK(m3[0].rows == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    auto m4 = enumerate_iglt(Partition({2, 2}), 4);
    REQUIRE(m4.size() == 2);
    CHECK(m4[0].rows == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(m4[1].rows == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK(enumerate_iglt(Partition({2, 1, 1}), 3).size() == 2);
    CHECK(enumerate_iglt(Partition({2, 1, 1}), 4).size() == 3);
    CHECK(enumerate_iglt(Partition({2}), 1).empty());
}

TEST_CASE("standard tableaux match the hook length formula") {
    for (int n = 1; n <= 8; ++n)
        for (auto& p : partitions_of(n))
            CHECK(static_cast<long long>(enumerate_iglt(p, n).size()) == hook_length_count(p));
}

TEST_CASE("top and bottom boxes") {
    IGLT big = big::tableau();
    CHECK(top_box(big, 17) == Cell{4, 4});
    CHECK(bot_box(big, 17) == Cell{5, 2});
    IGLT t = T({2, 2}, {{1, 2}, {2, 3}});
    CHECK(top_box(t, 2) == Cell{1, 2});
    CHECK(bot_box(t, 2) == Cell{2, 1});
    CHECK(top_box(t, 3) == bot_box(t, 3));
    CHECK_THROWS_AS(top_box(t, 4), Error);
}

TEST_CASE("descents") {
    IGLT a = T({2, 1, 1}, {{1, 2}, {3}, {4}});
    CHECK(descents(a) == std::set<int>{2, 3});
    CHECK(descent_composition(a) == Composition({2, 1, 1}));
    IGLT b = T({2, 1, 1}, {{1, 2}, {2}, {3}});
    CHECK(descents(b) == std::set<int>{1, 2});
    CHECK(descent_composition(b) == Composition({1, 1, 1}));
    IGLT row = T({4}, {{1, 2, 3, 4}});
    CHECK(descents(row).empty());
    CHECK(descent_composition(row) == Composition({4}));
}

TEST_CASE("attacking descents") {
    IGLT a = T({2, 1, 1}, {{1, 2}, {3}, {4}});
    CHECK(is_attacking_descent(a, 3));
    CHECK_FALSE(is_attacking_descent(a, 2));
    CHECK_FALSE(is_attacking_descent(a, 1));
}

TEST_CASE("multi_support") {
    CHECK(multi_support(T({2, 1}, {{1, 3}, {2}})).empty());
    CHECK(multi_support(T({2, 2}, {{1, 2}, {2, 3}})) == std::set<int>{2});
}

TEST_CASE("pi action on single tableaux") {
    IGLT a = T({2, 1, 1}, {{1, 2}, {3}, {4}});
    CHECK(pi_act(a, 1).kind == PiResult::Fix);
    CHECK(pi_act(a, 3).kind == PiResult::Zero);
    PiResult r = pi_act(a, 2);
    REQUIRE(r.kind == PiResult::Move);
    CHECK(r.image == T({2, 1, 1}, {{1, 3}, {2}, {4}}));
    CHECK(swap_values(a, 2) == r.image);
}

TEST_CASE("render") {
    CHECK(render(T({2, 1}, {{1, 2}, {3}})) == "1 2\n3\n");
    CHECK(render(T({9, 1}, {{1, 2, 3, 4, 5, 6, 7, 8, 10}, {9}})) == " 1  2  3  4  5  6  7  8 10\n 9\n");
}
