// Acceptance suite: one line per criterion, PASS or FAIL, exact arithmetic
// throughout. Exit status is the number of failed criteria.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "semicurve/motivic.hpp"
#include "semicurve/series.hpp"
#include "semicurve/xi_recovery.hpp"

using namespace semicurve;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("%2d %s: %s%s\n", n, ok ? "PASS" : "FAIL", title.c_str(), note.c_str());
    if (!ok) ++g_failures;
}

bool checks_pass(const CProvider& p, const ValueSemigroup& s, const std::string& which) {
    for (const auto& cr : check_identity(p, s, which))
        if (cr.status == Status::Fail || cr.status == Status::Inconclusive) return false;
    return true;
}

bool motivic_pass(const CProvider& p, const ValueSemigroup& s, const std::string& which) {
    for (const auto& cr : check_motivic(p, s, which))
        if (cr.status == Status::Fail || cr.status == Status::Inconclusive) return false;
    return true;
}

}  // namespace

int main() {
    std::vector<corpus::NamedSpec> curves = corpus::all();
    std::vector<std::pair<std::string, BuiltModel>> built;
    for (const auto& [name, spec] : curves) built.emplace_back(name, build_certified(spec));
    auto model_of = [&](const std::string& name) -> const BuiltModel& {
        for (const auto& [n, bm] : built)
            if (n == name) return bm;
        throw input_error("unknown corpus entry " + name);
    };

    criterion(1, "cusp: P' = -1 + t - t^2, product formula, hat P_g coincidence", [&] {
        const BuiltModel& bm = model_of("cusp");
        SemigroupProvider p{bm.semigroup};
        IntPoly want(1);
        want.set({0}, -1);
        want.set({1}, 1);
        want.set({2}, -1);
        if (poly_P_prime(p) != want) return false;
        if (one_branch_product({2, 3}) != want) return false;
        MotivicSeries hp = series_hatLg_hatPg(p, Box{{-1}, {12}}).second;
        for (long long n = 0; n <= 12; ++n)
            if (hp.poly.coeff({n}) != QLaurent(bm.semigroup.contains({n}) ? 1 : 0)) return false;
        return true;
    });

    criterion(2, "node: semigroup, P' = t1 t2 - 1, P = 1, functional equation", [&] {
        const BuiltModel& bm = model_of("node");
        if (bm.semigroup.delta() != Expo{1, 1}) return false;
        if (bm.semigroup.points() != std::vector<Expo>{{0, 0}, {1, 1}}) return false;
        SemigroupProvider p{bm.semigroup};
        IntPoly pp = poly_P_prime(p);
        IntPoly want(2);
        want.set({0, 0}, -1);
        want.set({1, 1}, 1);
        if (pp != want) return false;
        if (poly_P(p) != IntPoly::one(2)) return false;
        return (pp + pp.reciprocal_transform(bm.semigroup.delta())).is_zero();
    });

    criterion(3, "tacnode: P = 1 + t1 t2, symmetry, xi12 = 2 by both routes", [&] {
        const BuiltModel& bm = model_of("tacnode");
        SemigroupProvider p{bm.semigroup};
        if (poly_P(p) != IntPoly::one(2) + IntPoly::monomial(2, {1, 1})) return false;
        const Expo& d = bm.semigroup.delta();
        bool sym = true;
        for_each_point({-1, -1}, d, [&](const Expo& v) {
            if (bm.model.c(v) + bm.model.c(d - expo_ones(2) - v) != 2) sym = false;
        });
        if (!sym) return false;
        if (bm.semigroup.xi_oracle().xi[0][1] != 2) return false;
        XiRecovery rec = recover_xi(p, bm.semigroup);
        return !rec.ambiguous && rec.xi.xi[0][1] == 2;
    });

    criterion(4, "triple point: projection identity for every proper subset, xi = 1", [&] {
        const BuiltModel& bm = model_of("triple");
        SemigroupProvider p{bm.semigroup};
        if (!checks_pass(p, bm.semigroup, "projection")) return false;
        XiRecovery rec = recover_xi(p, bm.semigroup);
        if (rec.ambiguous || rec.xi != bm.semigroup.xi_oracle()) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (rec.xi.xi[i][j] != (i == j ? 0 : 1)) return false;
        return true;
    });

    criterion(5, "ring model and semigroup formulas agree on c, c(.,i), ell", [&] {
        for (const char* name : {"cusp", "node", "tacnode", "triple", "m4613"}) {
            const BuiltModel& bm = model_of(name);
            const ValueSemigroup& s = bm.semigroup;
            int r = s.r();
            bool ok = true;
            for_each_point(expo_const(r, -1), s.delta() + expo_ones(r), [&](const Expo& v) {
                if (s.c_chain(v) != bm.model.c(v)) ok = false;
                if (s.ell(v) != bm.model.ell(v)) ok = false;
                for (int i = 0; i < r; ++i)
                    if (s.c_axis(v, i) != bm.model.c_axis(v, i)) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    });

    criterion(6, "pivot independence and the maximal-coefficient classification", [&] {
        for (const auto& [name, bm] : built) {
            SemigroupProvider p{bm.semigroup};
            if (!checks_pass(p, bm.semigroup, "pi-independence")) return false;
            if (!checks_pass(p, bm.semigroup, "maximal-coeff")) return false;
        }
        return true;
    });

    criterion(7, "non-Gorenstein detection: <3,4,5> witness v = 1, plane members symmetric", [&] {
        SymmetryReport bad = model_of("m345").semigroup.symmetry_check();
        if (bad.gorenstein || !bad.witness || *bad.witness != Expo{1}) return false;
        for (const char* name : {"cusp", "node", "tacnode", "triple"})
            if (!model_of(name).semigroup.symmetry_check().gorenstein) return false;
        return true;
    });

    criterion(8, "restricted-series and codimension-series identities on the corpus", [&] {
        for (const auto& [name, bm] : built) {
            SemigroupProvider p{bm.semigroup};
            if (!checks_pass(p, bm.semigroup, "theorem-uno")) return false;
            if (!checks_pass(p, bm.semigroup, "cor-h")) return false;
        }
        return true;
    });

    criterion(9, "motivic: cusp bar P_g, node specialization, H_g identity, Q gap", [&] {
        SemigroupProvider cusp{model_of("cusp").semigroup};
        PgBarResult cbar = compute_Pg_bar(cusp, MotivicNorm::chi_g);
        QPoly cwant(1);
        cwant.set({0}, QLaurent(1));
        cwant.set({1}, -QLaurent::monomial(1));
        cwant.set({2}, QLaurent::monomial(1));
        if (!cbar.terminated || cbar.series.poly != cwant) return false;
        if (cbar.series.poly.specialize_unit(0, true).coeff(Expo{}) != QLaurent(1)) return false;

        SemigroupProvider node{model_of("node").semigroup};
        PgBarResult nbar = compute_Pg_bar(node, MotivicNorm::chi_g);
        QPoly nwant(1);
        nwant.set({0}, QLaurent(1) - QLaurent::monomial(1));
        if (!nbar.terminated || nbar.series.poly.specialize_unit(1, true) != nwant) return false;

        for (const auto& [name, bm] : built) {
            SemigroupProvider p{bm.semigroup};
            if (!motivic_pass(p, bm.semigroup, "prop-hg")) return false;
            if (!motivic_pass(p, bm.semigroup, "normalization-gap")) return false;
            if (!motivic_pass(p, bm.semigroup, "gorsky")) return false;
        }
        return true;
    });

    criterion(10, "Q -> 1 degenerates L_g and hat L_g to the classical coefficients", [&] {
        for (const auto& [name, bm] : built) {
            SemigroupProvider p{bm.semigroup};
            int r = p.r();
            Box box{expo_const(r, -1), p.delta() + expo_ones(r)};
            IntPoly l = series_L(p, box);
            if (q_at_one(series_Lg(p, box).poly) != l) return false;
            if (q_at_one(series_hatLg_hatPg(p, box).first.poly) != l) return false;
        }
        return true;
    });

    return g_failures;
}
