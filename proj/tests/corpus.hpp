#pragma once

// Shared corpus of small curve germs used across the test binaries:
//   cusp         t -> (t^2, t^3),        one branch, S = <2, 3>
//   node         two transversal lines
//   tacnode      two smooth branches with second-order contact
//   triple       three pairwise transversal lines
//   m4613        monomial branch t -> (t^4, t^6, t^13)
//   m345         monomial branch t -> (t^3, t^4, t^5), not Gorenstein
// Each entry exists both as a CurveSpec builder (library-level tests) and as
// a JSON file under tests/data (CLI tests).

#include <vector>

#include "semicurve/curve_model.hpp"

namespace corpus {

using semicurve::BranchSeries;
using semicurve::CurveSpec;

inline BranchSeries mono(long long exp, long long coeff = 1) {
    return {{exp, semicurve::Int(coeff), semicurve::Int(1)}};
}

inline CurveSpec make(std::vector<std::string> names,
                      std::vector<std::vector<BranchSeries>> gens) {
    CurveSpec s;
    s.mode = CurveSpec::Mode::parametrization;
    s.generator_names = std::move(names);
    s.generators = std::move(gens);
    return s;
}

inline CurveSpec cusp() { return make({"x", "y"}, {{mono(2)}, {mono(3)}}); }

inline CurveSpec node() {
    return make({"x", "y"}, {{mono(1), {}}, {{}, mono(1)}});
}

inline CurveSpec tacnode() {
    return make({"x", "y"}, {{mono(1), mono(1)}, {mono(2), mono(2, -1)}});
}

inline CurveSpec triple() {
    return make({"x", "y"}, {{mono(1), {}, mono(1)}, {{}, mono(1), mono(1, -1)}});
}

inline CurveSpec m4613() {
    return make({"x", "y", "z"}, {{mono(4)}, {mono(6)}, {mono(13)}});
}

inline CurveSpec m345() {
    return make({"x", "y", "z"}, {{mono(3)}, {mono(4)}, {mono(5)}});
}

struct NamedSpec {
    const char* name;
    CurveSpec spec;
};

inline std::vector<NamedSpec> all() {
    return {{"cusp", cusp()},   {"node", node()},   {"tacnode", tacnode()},
            {"triple", triple()}, {"m4613", m4613()}, {"m345", m345()}};
}

}  // namespace corpus
