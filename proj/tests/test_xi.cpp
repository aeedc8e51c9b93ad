#include <doctest.h>

#include "corpus.hpp"
#include "semicurve/series.hpp"
#include "semicurve/xi_recovery.hpp"

using namespace semicurve;

namespace {

IntPoly binom(long long z) {  // 1 - t^z
    return IntPoly::one(1) - IntPoly::monomial(1, {z});
}

}  // namespace

TEST_CASE("specializing all variables but one") {
    IntPoly p(2);  // t1 t2 - 1
    p.set({0, 0}, -1);
    p.set({1, 1}, 1);
    IntPoly s0 = specialize_branch(p, 0);
    CHECK(s0.coeff({0}) == -1);
    CHECK(s0.coeff({1}) == 1);
    // univariate input passes through
    IntPoly u = binom(3);
    CHECK(specialize_branch(u, 0) == u);
}

TEST_CASE("peeling binomial factors off a product") {
    IntPoly base = one_branch_product({2, 3});
    IntPoly q = base * binom(2) * binom(3);
    FactorMultiset f = peel_binomial_factors(q, base, 7);
    CHECK(f.branch == 7);
    CHECK(f.zs == std::vector<long long>{2, 3});
    // repeated factors come out with multiplicity
    FactorMultiset g = peel_binomial_factors(base * binom(2) * binom(2), base, 0);
    CHECK(g.zs == std::vector<long long>{2, 2});
    // nothing left to peel
    CHECK(peel_binomial_factors(base, base, 0).zs.empty());
    // inexact division is an error, not a wrong answer
    CHECK_THROWS_AS(peel_binomial_factors(binom(5), base, 0), divisibility_error);
}

TEST_CASE("matching row multisets to a symmetric matrix") {
    // all-ones off-diagonal: unique
    std::vector<FactorMultiset> rows = {{0, {1, 1}}, {1, {1, 1}}, {2, {1, 1}}};
    XiRecovery rec = match_xi(rows);
    CHECK(!rec.ambiguous);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(rec.xi.xi[i][j] == (i == j ? 0 : 1));
    // inconsistent rows have no symmetric completion
    std::vector<FactorMultiset> bad = {{0, {1}}, {1, {2}}};
    CHECK_THROWS_AS(match_xi(bad), input_error);
}

TEST_CASE("end-to-end recovery agrees with the conductor oracle") {
    for (const char* name : {"tacnode", "triple"}) {
        CAPTURE(name);
        CurveSpec spec = std::string(name) == "tacnode" ? corpus::tacnode() : corpus::triple();
        BuiltModel bm = build_certified(spec);
        SemigroupProvider p{bm.semigroup};
        XiRecovery rec = recover_xi(p, bm.semigroup);
        CHECK(!rec.ambiguous);
        CHECK(rec.xi == bm.semigroup.xi_oracle());
    }
    // tacnode value, explicitly
    BuiltModel tac = build_certified(corpus::tacnode());
    SemigroupProvider p{tac.semigroup};
    CHECK(recover_xi(p, tac.semigroup).xi.xi[0][1] == 2);
}

TEST_CASE("one branch: nothing to recover") {
    BuiltModel bm = build_certified(corpus::cusp());
    SemigroupProvider p{bm.semigroup};
    XiRecovery rec = recover_xi(p, bm.semigroup);
    CHECK(!rec.ambiguous);
    CHECK(rec.xi.r == 1);
}
