#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semicurve/multipoly.hpp"
#include "semicurve/provider.hpp"
#include "semicurve/series.hpp"

namespace semicurve {

// The generalised series carry coefficients in Z[Q, Q^-1]. The two
// normalizations differ by one overall factor of Q; chi-g is the one under
// which the Gorsky specialization and the r = 1 coincidence hold, and is the
// default everywhere.
enum class MotivicNorm { chi_g, paper_literal };

const char* norm_name(MotivicNorm n);
MotivicNorm parse_norm(const std::string& s);

struct MotivicSeries {
    QPoly poly;
    MotivicNorm norm = MotivicNorm::chi_g;

    MotivicSeries() : poly(1) {}
    MotivicSeries(QPoly p, MotivicNorm n) : poly(std::move(p)), norm(n) {}
};

// L_g: coefficient at v is Q^{ell(v)} (1 + Q + ... + Q^{c(v)-1}) in the chi-g
// normalization, Q times that in the paper-literal one.
MotivicSeries series_Lg(const CProvider& p, const Box& box,
                        MotivicNorm norm = MotivicNorm::chi_g);

// P_g from L_g: forms P'_g = L_g prod(t_i - 1) coefficientwise and inverts
// the telescoping p'_g(v) = p_g(v - 1) - p_g(v) with base p_g = 0 off N^r.
// The input box must reach down to -1; the result is certified up to box.hi.
MotivicSeries series_Pg(const MotivicSeries& lg);

// hat L_g: coefficient at v is the class of P^{c(v)-1} written in Q,
// Q^{1-c(v)} (1 + Q + ... + Q^{c(v)-1}); hat P_g by the same telescoping.
std::pair<MotivicSeries, MotivicSeries> series_hatLg_hatPg(const CProvider& p, const Box& box);

// H_g: coefficient at v is Q^{-ell(v)}, supported on N^r.
MotivicSeries series_Hg(const CProvider& p, const Box& box);

struct PgBarResult {
    MotivicSeries series;
    bool terminated = false;  // all certified coefficients outside [0, delta] vanish
};

// bar P_g = prod (1 - Q t_i) P_g, with a termination check against delta; on
// success the result is promoted to an exact polynomial.
PgBarResult poly_Pg_bar(const MotivicSeries& pg, const Expo& delta);

// Convenience pipeline L_g -> P_g -> bar P_g with margin past the conductor.
MotivicSeries compute_Pg(const CProvider& p, MotivicNorm norm, long long margin = 3);
PgBarResult compute_Pg_bar(const CProvider& p, MotivicNorm norm, long long margin = 3);

// Named checks: gorsky, prop-hg, r1-coincidence, normalization-gap.
std::vector<CheckResult> check_motivic(const CProvider& p, const ValueSemigroup& s,
                                       const std::string& which,
                                       MotivicNorm norm = MotivicNorm::chi_g);

const std::vector<std::string>& motivic_check_names();

}  // namespace semicurve
