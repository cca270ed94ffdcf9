#include "doctest.h"

#include "gapless/hecke.hpp"

#include <algorithm>

using namespace gapless;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
Composition C(std::vector<int> p) { return Composition(std::move(p)); }

std::size_t index_of(const GModule& G, std::vector<std::vector<int>> rows) {
    for (std::size_t b = 0; b < G.basis.size(); ++b)
        if (G.basis[b].rows == rows)
            return b;
    FAIL("tableau not in basis");
    return 0;
}

}  // namespace

TEST_CASE("action graph of G((2,1,1); 4)") {
    GModule G = g_module(Partition({2, 1, 1}), 4);
    REQUIRE(G.basis.size() == 3);
    std::size_t a = index_of(G, {{1, 2}, {3}, {4}});
    std::size_t b = index_of(G, {{1, 3}, {2}, {4}});
    std::size_t c = index_of(G, {{1, 4}, {2}, {3}});
    CHECK(G.module.act(1, a) == ActionResult::fix());
    CHECK(G.module.act(2, a) == ActionResult::send(b));
    CHECK(G.module.act(3, a) == ActionResult::zero());
    CHECK(G.module.act(3, b) == ActionResult::send(c));
    CHECK(G.module.act(1, b) == ActionResult::zero());
    CHECK(pi_word_apply(G.module, {}, a) == a);
    CHECK(pi_word_apply(G.module, {2, 3}, a) == c);
    CHECK(pi_word_apply(G.module, {2, 1, 3}, a) == std::nullopt);
    CHECK(verify_relations(G.module).ok);
    CHECK(is_triangular(G.module));
}

TEST_CASE("G((2,1,1); 3) has two fixed tableaux") {
    GModule G = g_module(Partition({2, 1, 1}), 3);
    REQUIRE(G.basis.size() == 2);
    CHECK(characteristic(G.module) == scale(2, fundamental(C({1, 1, 1}))));
}

TEST_CASE("characteristic of G((2,2); 4)") {
    GModule G = g_module(Partition({2, 2}), 4);
    CHECK(characteristic(G.module) == fundamental(C({2, 2})) + fundamental(C({1, 2, 1})));
}

TEST_CASE("weak Bruhat interval module") {
    BModule B = b_module(P({2, 1, 3, 4}), P({4, 1, 2, 3}));
    REQUIRE(B.basis.size() == 3);
    CHECK(verify_relations(B.module).ok);
    auto at = [&](const Permutation& p) {
        return static_cast<std::size_t>(std::find(B.basis.begin(), B.basis.end(), p) - B.basis.begin());
    };
    CHECK(B.module.act(1, at(P({2, 1, 3, 4}))) == ActionResult::fix());
    CHECK(B.module.act(2, at(P({2, 1, 3, 4}))) == ActionResult::send(at(P({3, 1, 2, 4}))));
    CHECK(B.module.act(3, at(P({3, 1, 2, 4}))) == ActionResult::send(at(P({4, 1, 2, 3}))));
    CHECK(B.module.act(1, at(P({3, 1, 2, 4}))) == ActionResult::zero());
    CHECK_THROWS_AS(b_module(P({1, 3, 2}), P({2, 1, 3})), Error);
}

TEST_CASE("corrupted action tables are caught") {
    GModule G = g_module(Partition({2, 1, 1}), 4);
    HeckeModule bad = G.module;
    std::size_t a = index_of(G, {{1, 2}, {3}, {4}});
    std::size_t b = index_of(G, {{1, 3}, {2}, {4}});
    // pi_2 a = b but pi_2 b = a breaks idempotence
    bad.table()[1][b] = ActionResult::send(a);
    RelationReport r = verify_relations(bad);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.witness.empty());
    CHECK_FALSE(is_triangular(bad));
    CHECK_THROWS_AS(characteristic(bad), Error);
    CHECK_THROWS_AS(HeckeModule(2, 1, {{ActionResult::send(4)}}), Error);
}

TEST_CASE("module maps") {
    GModule G = g_module(Partition({2, 1, 1}), 4);
    std::vector<Image> id;
    for (std::size_t b = 0; b < G.basis.size(); ++b)
        id.push_back(b);
    CHECK(verify_module_map(G.module, G.module, id));
    std::vector<Image> swapped = id;
    std::swap(swapped[0], swapped[1]);
    CHECK_FALSE(verify_module_map(G.module, G.module, swapped));
}

TEST_CASE("reachability and dot export") {
    GModule G = g_module(Partition({2, 1, 1}), 4);
    auto reach = reachability(G.module);
    std::size_t a = index_of(G, {{1, 2}, {3}, {4}});
    std::size_t c = index_of(G, {{1, 4}, {2}, {3}});
    CHECK(reach[a][c]);
    CHECK_FALSE(reach[c][a]);
    CHECK(reach[a][a]);
    std::string dot = to_dot(G.module, [&](std::size_t b) { return render(G.basis[b]); });
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(dot.find("zero") != std::string::npos);
}

TEST_CASE("g_module_on detects leaving the basis") {
    GModule G = g_module(Partition({2, 1, 1}), 4);
    CHECK(g_module_on(G.basis, 4).has_value());
    std::vector<IGLT> part{G.basis[0]};
    bool has_move = false;
    for (int i = 1; i < 4; ++i)
        if (G.module.act(i, 0).kind == ActionResult::SendTo)
            has_move = true;
    CHECK(g_module_on(part, 4).has_value() == !has_move);
}

TEST_CASE("standard ribbon tableaux") {
    GeneralizedComposition g({C({2, 1}), C({1, 1})});
    auto all = enumerate_srt(g);
    for (auto& t : all)
        CHECK(is_srt(t));
    auto [lo, hi] = lread_interval(g);
    CHECK(lo == P({2, 1, 3, 4, 5}));
    CHECK(hi == P({5, 3, 4, 1, 2}));
    std::vector<Permutation> reads;
    for (auto& t : all)
        reads.push_back(lread(t));
    std::sort(reads.begin(), reads.end());
    auto iv = weak_interval(lo, hi);
    std::sort(iv.begin(), iv.end());
    CHECK(reads == iv);
    CHECK(is_srt(canonical_srt(g)));
}

TEST_CASE("reading words of ribbon tableaux") {
    GeneralizedComposition single({C({1, 1, 1, 1})});
    CHECK(lread(canonical_srt(single)) == identity(4));
    GeneralizedComposition column({C({4})});
    CHECK(lread(canonical_srt(column)) == longest(4));
    CHECK(enumerate_srt(column).size() == 1);
}

TEST_CASE("projective modules satisfy the relations") {
    for (int n = 1; n <= 5; ++n)
        for (auto& a : compositions_of(n)) {
            PModule P = p_module(GeneralizedComposition({a}));
            CHECK(verify_relations(P.module).ok);
        }
    PModule P = p_module(GeneralizedComposition({C({2, 1}), C({1, 1})}));
    CHECK(verify_relations(P.module).ok);
    CHECK(P.basis.size() == enumerate_srt(P.shape).size());
}

TEST_CASE("ribbon tableau rendering") {
    GeneralizedComposition g({C({1, 1, 2}), C({1, 1})});
    SRT t{g, ribbon_cells(g), {5, 6, 3, 1, 2, 4}};
    REQUIRE(is_srt(t));
    CHECK(render(t) == ". . . 5 6\n. . 3\n1 2 4\n");
    CHECK(lread(t) == P({1, 2, 4, 3, 5, 6}));
}
