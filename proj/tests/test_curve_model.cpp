#include <doctest.h>

#include "corpus.hpp"
#include "semicurve/curve_model.hpp"

using namespace semicurve;

TEST_CASE("cusp model: dimensions of the filtration quotients") {
    BuiltModel bm = build_certified(corpus::cusp());
    CHECK(bm.model.r() == 1);
    CHECK(bm.semigroup.delta() == Expo{2});
    // S = {0, 2, 3, 4, ...}: one gap, so ell(v) counts members below v
    CHECK(bm.model.ell({0}) == 0);
    CHECK(bm.model.ell({1}) == 1);
    CHECK(bm.model.ell({2}) == 1);
    CHECK(bm.model.ell({3}) == 2);
    CHECK(bm.model.member({0}));
    CHECK(!bm.model.member({1}));
    CHECK(bm.model.member({2}));
    CHECK(bm.model.c({0}) == 1);
    CHECK(bm.model.c({1}) == 0);
    CHECK(bm.model.c_axis({2}, 0) == 1);
}

TEST_CASE("node model: c as a rank over two branches") {
    BuiltModel bm = build_certified(corpus::node());
    CHECK(bm.semigroup.delta() == Expo{1, 1});
    CHECK(bm.model.c({0, 0}) == 1);
    CHECK(bm.model.c({1, 1}) == 2);   // past the conductor c = r
    CHECK(bm.model.c({1, 0}) == 1);  // (1,1) witnesses growth in the second axis
    CHECK(bm.model.c_axis({1, 1}, 1) == 1);
    CHECK(bm.model.c_axis({1, 0}, 1) == 0);
    CHECK(bm.model.member({1, 1}));
    CHECK(!bm.model.member({1, 0}));
}

TEST_CASE("conductor extraction matches known semigroups") {
    CHECK(build_certified(corpus::tacnode()).semigroup.delta() == Expo{2, 2});
    CHECK(build_certified(corpus::triple()).semigroup.delta() == Expo{2, 2, 2});
    // <4, 6, 13>: gaps up to 15, conductor 16 (not visible from the pairwise
    // generators alone; needs products like t^4 * t^6)
    CHECK(build_certified(corpus::m4613()).semigroup.delta() == Expo{16});
    CHECK(build_certified(corpus::m345()).semigroup.delta() == Expo{3});
}

TEST_CASE("tacnode members on the conductor box") {
    ValueSemigroup s = build_certified(corpus::tacnode()).semigroup;
    std::vector<Expo> want = {{0, 0}, {1, 1}, {2, 2}};
    CHECK(s.points() == want);
}

TEST_CASE("too small a truncation is reported, not silently wrong") {
    AlgebraModel small = AlgebraModel::build(corpus::m4613(), 14);
    CHECK_THROWS_AS(small.extract_semigroup(), truncation_error);
    try {
        small.extract_semigroup();
    } catch (const truncation_error& e) {
        CHECK(e.suggested_order > 14);
    }
}

TEST_CASE("prime-field model agrees with the rational one") {
    CurveSpec fp = corpus::tacnode();
    fp.field.rational = false;
    fp.field.p = 10007;
    BuiltModel a = build_certified(corpus::tacnode());
    BuiltModel b = build_certified(fp);
    CHECK(a.semigroup.delta() == b.semigroup.delta());
    for_each_point({-1, -1}, {3, 3}, [&](const Expo& v) {
        CHECK(a.model.c(v) == b.model.c(v));
        CHECK(a.model.ell(v) == b.model.ell(v));
    });
}

TEST_CASE("default truncation scales with the generator orders") {
    CHECK(default_truncation(corpus::cusp()) == 4 * 3 + 8);
    CHECK(default_truncation(corpus::m4613()) == 4 * 13 + 8);
}
