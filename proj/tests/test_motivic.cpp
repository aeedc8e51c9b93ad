#include <doctest.h>

#include "corpus.hpp"
#include "semicurve/motivic.hpp"

using namespace semicurve;

namespace {

SemigroupProvider provider(const CurveSpec& spec) {
    return SemigroupProvider(build_certified(spec).semigroup);
}

QLaurent minus_q() { return -QLaurent::monomial(1); }

}  // namespace

TEST_CASE("cusp: bar P_g = 1 - Q t + Q t^2, value 1 at t = 1") {
    SemigroupProvider p = provider(corpus::cusp());
    PgBarResult bar = compute_Pg_bar(p, MotivicNorm::chi_g);
    REQUIRE(bar.terminated);
    QPoly want(1);
    want.set({0}, QLaurent(1));
    want.set({1}, minus_q());
    want.set({2}, QLaurent::monomial(1));
    CHECK(bar.series.poly == want);
    QPoly at1 = bar.series.poly.specialize_unit(0, true);
    CHECK(at1.coeff(Expo{}) == QLaurent(1));
}

TEST_CASE("node: forgetting a branch and evaluating at 1") {
    SemigroupProvider p = provider(corpus::node());
    PgBarResult bar = compute_Pg_bar(p, MotivicNorm::chi_g);
    REQUIRE(bar.terminated);
    // a smooth branch has bar P_g = 1, so the specialization is (1 - Q) itself
    QPoly t2_at_1 = bar.series.poly.specialize_unit(1, true);
    QPoly want(1);
    want.set({0}, QLaurent(1) - QLaurent::monomial(1));
    CHECK(t2_at_1 == want);
    // full evaluation at (1, 1): (1 - Q)^{r - 1}
    CHECK(t2_at_1.specialize_unit(0, true).coeff(Expo{}) == QLaurent(1) - QLaurent::monomial(1));
}

TEST_CASE("L_g coefficients: ell shift times a Q-power range") {
    SemigroupProvider p = provider(corpus::cusp());
    MotivicSeries lg = series_Lg(p, Box{{-1}, {4}});
    CHECK(lg.poly.coeff({-1}).is_zero());
    CHECK(lg.poly.coeff({0}) == QLaurent(1));                     // ell 0, c 1
    CHECK(lg.poly.coeff({1}).is_zero());                          // c = 0 gap
    CHECK(lg.poly.coeff({3}) == QLaurent::monomial(2));           // ell 2, c 1
    // paper-literal carries one extra factor of Q everywhere
    MotivicSeries lit = series_Lg(p, Box{{-1}, {4}}, MotivicNorm::paper_literal);
    CHECK(lit.poly.coeff({3}) == QLaurent::monomial(3));
}

TEST_CASE("hat L_g coefficients live in nonpositive Q-degrees") {
    SemigroupProvider p = provider(corpus::node());
    auto [hl, hp] = series_hatLg_hatPg(p, Box{{-1, -1}, {3, 3}});
    CHECK(hl.poly.coeff({1, 1}) == QLaurent::power_range(-1, 0));  // c = 2
    CHECK(hl.poly.coeff({0, 0}) == QLaurent(1));                   // c = 1
    CHECK(hp.poly.coeff({0, 0}) == QLaurent(1));
}

TEST_CASE("H_g stores inverse Q-powers of ell") {
    SemigroupProvider p = provider(corpus::cusp());
    MotivicSeries hg = series_Hg(p, Box{{0}, {4}});
    CHECK(hg.poly.coeff({0}) == QLaurent(1));
    CHECK(hg.poly.coeff({1}) == QLaurent::monomial(-1));
    CHECK(hg.poly.coeff({3}) == QLaurent::monomial(-2));
}

TEST_CASE("Q := 1 degeneration of L_g and hat L_g reproduces c") {
    for (const auto& [name, spec] : corpus::all()) {
        CAPTURE(name);
        SemigroupProvider p = provider(spec);
        int r = p.r();
        Box box{expo_const(r, -1), p.delta() + expo_ones(r)};
        IntPoly l = series_L(p, box);
        CHECK(q_at_one(series_Lg(p, box).poly) == l);
        CHECK(q_at_one(series_hatLg_hatPg(p, box).first.poly) == l);
    }
}

TEST_CASE("named motivic checks pass on the whole corpus") {
    for (const auto& [name, spec] : corpus::all()) {
        CAPTURE(name);
        BuiltModel bm = build_certified(spec);
        SemigroupProvider p{bm.semigroup};
        for (const auto& which : motivic_check_names()) {
            for (const auto& cr : check_motivic(p, bm.semigroup, which)) {
                CAPTURE(cr.name);
                CAPTURE(cr.detail);
                CHECK(cr.status != Status::Fail);
                CHECK(cr.status != Status::Inconclusive);
            }
        }
    }
}

TEST_CASE("normalization names round-trip") {
    CHECK(parse_norm("chi-g") == MotivicNorm::chi_g);
    CHECK(parse_norm("paper-literal") == MotivicNorm::paper_literal);
    CHECK(std::string(norm_name(MotivicNorm::chi_g)) == "chi-g");
    CHECK_THROWS_AS(parse_norm("euler"), input_error);
}
