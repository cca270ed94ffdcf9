#include "doctest.h"

#include "big_example.hpp"

#include "gapless/projective.hpp"

using namespace gapless;

namespace {

Composition C(std::vector<int> p) { return Composition(std::move(p)); }
Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

SRT srt(const GeneralizedComposition& g, std::vector<int> entries) {
    SRT t{g, ribbon_cells(g), std::move(entries)};
    REQUIRE(is_srt(t));
    return t;
}

IGLT first_example() { return validate(Partition({4, 2, 1, 1}), {{1, 2, 3, 4}, {2, 3}, {5}, {6}}); }
IGLT second_example() { return validate(Partition({4, 2, 1}), {{1, 2, 4, 5}, {2, 3}, {4}}); }

}  // namespace

TEST_CASE("bal_E of the two worked classes") {
    CHECK(bal_e(class_of(first_example())) == GeneralizedComposition({C({1, 1, 2}), C({1, 1})}));
    CHECK(bal_e(class_of(second_example())) == GeneralizedComposition({C({1, 1, 1, 2})}));
    auto cls = classes(Partition({2, 1, 1}), 4);
    REQUIRE(cls.size() == 1);
    CHECK(bal_e(cls[0]) == GeneralizedComposition({C({2, 1, 1})}));
}

TEST_CASE("fillings read off ribbon tableaux") {
    EquivClass e = class_of(first_example());
    CHECK(e.source == first_example());
    EtaContext ctx = eta_context(e);
    const auto& g = ctx.bal;

    SRT t0 = srt(g, {5, 6, 3, 1, 2, 4});
    SRT t1 = srt(g, {3, 4, 5, 1, 2, 6});
    SRT t2 = srt(g, {2, 4, 3, 1, 5, 6});

    CHECK(t_of_srt(ctx, t0) == first_example().rows);
    auto e0 = eta(ctx, t0);
    REQUIRE(e0);
    CHECK(*e0 == first_example());

    std::vector<std::vector<int>> r1{{1, 2, 5, 6}, {2, 5}, {3}, {4}};
    CHECK(t_of_srt(ctx, t1) == r1);
    auto e1 = eta(ctx, t1);
    REQUIRE(e1);
    CHECK(e1->rows == r1);

    std::vector<std::vector<int>> r2{{1, 5, 3, 6}, {5, 3}, {2}, {4}};
    CHECK(t_of_srt(ctx, t2) == r2);
    CHECK_FALSE(eta(ctx, t2).has_value());

    CHECK(srt_of_t(ctx, first_example()) == t0);
}

TEST_CASE("an increasing filling outside the class maps to zero") {
    EquivClass e = class_of(second_example());
    EtaContext ctx = eta_context(e);
    SRT t = srt(ctx.bal, {3, 1, 2, 4, 5});
    std::vector<std::vector<int>> rows{{1, 2, 3, 5}, {2, 4}, {3}};
    CHECK(t_of_srt(ctx, t) == rows);
    CHECK(is_iglt(e.lambda, rows));
    CHECK_FALSE(eta(ctx, t).has_value());
}

TEST_CASE("eta is a bijection for the (2,1,1) class") {
    auto e = classes(Partition({2, 1, 1}), 4).at(0);
    EtaContext ctx = eta_context(e);
    auto all = enumerate_srt(ctx.bal);
    CHECK(all.size() == 3);
    for (auto& t : all)
        CHECK(eta(ctx, t).has_value());
    CoverReport r = verify_projective_cover(e);
    CHECK(r.kernel_size == 0);
    CHECK(r.ok());
}

TEST_CASE("the (2,1,1) class is a weak Bruhat interval module") {
    auto e = classes(Partition({2, 1, 1}), 4).at(0);
    CHECK(sfread(e, e.source) == P({2, 1, 3, 4}));
    CHECK(sfread(e, e.sink) == P({4, 1, 2, 3}));
    CHECK(verify_wbim_iso(e));
}

TEST_CASE("sink of the reading example") {
    EquivClass e = class_of(big::reading_source());
    EtaContext ctx = eta_context(e);
    CHECK(lread(srt_of_t(ctx, e.sink)) == sfread(e, e.sink));
    CHECK(lread(srt_of_t(ctx, e.source)) == sfread(e, e.source));
}

TEST_CASE("distinguished ribbon tableaux") {
    GeneralizedComposition g({C({2, 1}), C({1, 1})});
    CHECK(lread(bullet_srt(g)) == P({2, 1, 3, 4, 5}));
    CHECK(lread(odot_srt(g)) == P({2, 1, 4, 3, 5}));
    auto iv = srt_interval(g);
    CHECK(iv.size() == 2);
    for (int n = 1; n <= 5; ++n)
        for (auto& a : compositions_of(n)) {
            GeneralizedComposition h({a});
            CHECK(lread(bullet_srt(h)) == parabolic_longest(gc_bullet(h)));
            CHECK(lread(odot_srt(h)) == parabolic_longest(gc_odot(h)));
        }
}

TEST_CASE("projective cover of the worked classes") {
    for (const IGLT& t : {first_example(), second_example()}) {
        EquivClass e = class_of(t);
        CoverReport r = verify_projective_cover(e);
        CHECK(r.surjective);
        CHECK(r.dims_ok);
        CHECK(r.equivariant);
        CHECK(r.kernel_outside_interval);
        CHECK(r.reads_ok);
        CHECK(r.dim_srt == r.dim_class + r.kernel_size);
        CHECK(verify_wbim_iso(e));
    }
}
