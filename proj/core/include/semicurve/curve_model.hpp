#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semicurve/exponent.hpp"
#include "semicurve/numeric.hpp"
#include "semicurve/value_semigroup.hpp"

namespace semicurve {

// One branch component of a generator: a truncated univariate power series
// with exact rational coefficients, stored as (exponent, numerator,
// denominator) triples. Over a prime field the fraction is reduced mod p.
struct SeriesTerm {
    long long exp = 0;
    Int num = 0;
    Int den = 1;
};
using BranchSeries = std::vector<SeriesTerm>;

struct FieldSpec {
    bool rational = true;
    long long p = 10007;
};

struct CurveSpec {
    enum class Mode { parametrization, explicit_semigroup };
    Mode mode = Mode::parametrization;
    FieldSpec field;

    // parametrization mode: generators[g][branch]
    std::vector<std::string> generator_names;
    std::vector<std::vector<BranchSeries>> generators;

    // explicit-semigroup mode
    int semigroup_r = 0;
    Expo semigroup_conductor;
    std::vector<Expo> semigroup_points;

    int branch_count() const {
        if (mode == Mode::explicit_semigroup) return semigroup_r;
        return generators.empty() ? 0 : static_cast<int>(generators.front().size());
    }
};

// Exact echelonised model of the image of the local ring inside the product
// of truncated power-series rings, prod_i k[t_i]/(t_i^N). Answers all
// dimension queries ell(v), c(v), c(v,i) and value-vector membership by rank
// computations; queries are certified only for v_i <= N - 2.
class AlgebraModel {
  public:
    static AlgebraModel build(const CurveSpec& spec, long long truncation);

    int r() const;
    long long truncation() const;
    long long dimension() const;

    long long ell(const Expo& v) const;
    long long c(const Expo& v) const;
    int c_axis(const Expo& v, int i) const;
    bool member(const Expo& v) const;

    // Tabulates S on [0, delta] after certifying a conductor via the
    // stabilisation c(v) = r on the shell [delta, delta + 1]. Throws
    // truncation_error (with a suggested larger N) when the certificate does
    // not fit in the current truncation.
    ValueSemigroup extract_semigroup() const;

    struct Impl;

  private:
    std::shared_ptr<Impl> impl_;
};

struct BuiltModel {
    AlgebraModel model;
    ValueSemigroup semigroup;
};

// Build policy: N = hint, or 4 * (max generator order) + 8; on certification
// failure the truncation is doubled, up to a cap.
BuiltModel build_certified(const CurveSpec& spec, std::optional<long long> n_hint = {});

long long default_truncation(const CurveSpec& spec);

}  // namespace semicurve
