#include <doctest.h>

#include "semicurve/multipoly.hpp"

using namespace semicurve;

TEST_CASE("exponent vector lattice operations") {
    Expo a = {1, 3}, b = {2, 2};
    CHECK(a + b == Expo{3, 5});
    CHECK(a - b == Expo{-1, 1});
    CHECK(join(a, b) == Expo{2, 3});
    CHECK(meet(a, b) == Expo{1, 2});
    CHECK(!leq(a, b));
    CHECK(leq(meet(a, b), a));
    CHECK(clip_nonneg(Expo{-2, 5}) == Expo{0, 5});
    CHECK(is_nonneg(Expo{0, 0}));
    CHECK(!is_nonneg(Expo{0, -1}));
    CHECK_THROWS_AS((void)(a + Expo{1}), dimension_error);
}

TEST_CASE("graded-lex order") {
    GradedLexLess less;
    CHECK(less(Expo{1, 0}, Expo{0, 2}));   // degree first
    CHECK(less(Expo{0, 2}, Expo{1, 1}));   // then lex
    CHECK(!less(Expo{1, 1}, Expo{1, 1}));
}

TEST_CASE("for_each_point visits the box once, in lex order") {
    std::vector<Expo> seen;
    for_each_point(Expo{-1, 0}, Expo{0, 1}, [&](const Expo& v) { seen.push_back(v); });
    std::vector<Expo> want = {{-1, 0}, {-1, 1}, {0, 0}, {0, 1}};
    CHECK(seen == want);
    seen.clear();
    for_each_point(Expo{1, 0}, Expo{0, 5}, [&](const Expo& v) { seen.push_back(v); });
    CHECK(seen.empty());  // empty box
}

TEST_CASE("polynomial arithmetic and zero-coefficient cleanup") {
    IntPoly p = IntPoly::monomial(2, {1, 0}) - IntPoly::one(2);
    IntPoly q = IntPoly::monomial(2, {1, 0}) + IntPoly::one(2);
    IntPoly prod = p * q;  // t1^2 - 1
    CHECK(prod.coeff({2, 0}) == 1);
    CHECK(prod.coeff({0, 0}) == -1);
    CHECK(prod.coeff({1, 0}) == 0);
    CHECK(prod.terms().size() == 2);
    CHECK((p - p).is_zero());
    CHECK(prod.str() == "-1 + t1^2");
}

TEST_CASE("certification box of a truncated times exact product") {
    // truncated series known on [0, 5]
    IntPoly s(1);
    for (long long n = 0; n <= 5; ++n) s.add_term({n}, 1);
    s.set_box(Box{{0}, {5}});
    // exact factor t^2 + t
    IntPoly f = IntPoly::monomial(1, {2}) + IntPoly::monomial(1, {1});
    IntPoly prod = s * f;
    REQUIRE(prod.truncated());
    // lower end grows by the exact support max, upper end by its min
    CHECK(prod.box()->lo == Expo{2});
    CHECK(prod.box()->hi == Expo{6});
    CHECK(prod.coeff({2}) == 2);
    CHECK(prod.coeff({6}) == 2);
    CHECK(prod.coeff({1}) == 0);  // below the certified range, clipped
}

TEST_CASE("set_box clips stray terms") {
    IntPoly p = IntPoly::monomial(1, {4}) + IntPoly::one(1);
    p.set_box(Box{{0}, {3}});
    CHECK(p.coeff({4}) == 0);
    CHECK(p.coeff({0}) == 1);
}

TEST_CASE("specializing a variable") {
    IntPoly p = IntPoly::monomial(2, {1, 1}) + IntPoly::monomial(2, {0, 2});
    IntPoly at1 = p.specialize_unit(1, true);   // t2 := 1
    CHECK(at1.coeff({1}) == 1);
    CHECK(at1.coeff({0}) == 1);
    IntPoly at0 = p.specialize_unit(1, false);  // t2 := 0
    CHECK(at0.is_zero());

    IntPoly trunc = p;
    trunc.set_box(Box{{0, 0}, {3, 3}});
    CHECK_THROWS_AS(trunc.specialize_unit(1, true), range_error);  // tail unknown
    CHECK_NOTHROW(trunc.specialize_unit(1, false));
}

TEST_CASE("reciprocal transform is exponent reflection with parity sign") {
    IntPoly p = IntPoly::monomial(1, {2}) - IntPoly::one(1);  // t^2 - 1, r = 1
    IntPoly q = p.reciprocal_transform({2});
    CHECK(q.coeff({0}) == -1);
    CHECK(q.coeff({2}) == 1);
    CHECK(q == p);  // this one is self-reciprocal
}

TEST_CASE("embed widens certification on untouched coordinates") {
    IntPoly p = IntPoly::monomial(1, {3});
    p.set_box(Box{{0}, {4}});
    IntPoly e = p.embed(2, {1});
    REQUIRE(e.truncated());
    CHECK(e.coeff({0, 3}) == 1);
    CHECK(e.box()->lo == Expo{0, 0});
    CHECK(e.box()->hi[1] == 4);
    CHECK(e.box()->hi[0] > 1'000'000);  // no support in coordinate 0
}

TEST_CASE("QLaurent ring operations") {
    QLaurent a = QLaurent::power_range(0, 2);        // 1 + Q + Q^2
    QLaurent b = QLaurent::monomial(-1) - QLaurent(1);
    CHECK(a.at_one() == 3);
    CHECK((a * b).at_one() == 0);
    CHECK(QLaurent::power_range(3, 2).is_zero());
    CHECK((a - a).is_zero());
    // (1 - Q^3) / (1 - Q) = 1 + Q + Q^2
    QLaurent num = QLaurent(1) - QLaurent::monomial(3);
    QLaurent den = QLaurent(1) - QLaurent::monomial(1);
    CHECK(num.exact_div(den) == a);
    CHECK_THROWS_AS(a.exact_div(den), divisibility_error);
    CHECK(b.str() == "Q^-1 - 1");  // ascending Q-exponent order
}

TEST_CASE("Q := 1 degeneration of a QPoly") {
    QPoly p(1);
    p.set({0}, QLaurent::power_range(0, 1));          // 1 + Q
    p.set({1}, QLaurent::monomial(2) - QLaurent(1));  // Q^2 - 1 -> 0
    IntPoly d = q_at_one(p);
    CHECK(d.coeff({0}) == 2);
    CHECK(d.coeff({1}) == 0);
}
