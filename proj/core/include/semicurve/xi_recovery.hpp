#pragma once

#include <vector>

#include "semicurve/multipoly.hpp"
#include "semicurve/provider.hpp"

namespace semicurve {

// Multiset of binomial exponents peeled from one specialization of P'.
struct FactorMultiset {
    int branch = 0;
    std::vector<long long> zs;  // sorted ascending, r - 1 entries for a full curve
};

struct XiRecovery {
    XiMatrix xi;
    bool ambiguous = false;
    std::vector<XiMatrix> all;  // every consistent symmetric assignment
};

// P'(1, ..., 1, t_i, 1, ..., 1): every variable except t_i set to one.
// Requires an exact polynomial; a univariate input passes through unchanged.
IntPoly specialize_branch(const IntPoly& pprime, int i);

// Divides q by base, then repeatedly removes factors 1 - t^z: the smallest
// positive exponent with nonzero coefficient -m contributes z with
// multiplicity m. Throws divisibility_error when any division is inexact.
FactorMultiset peel_binomial_factors(const IntPoly& q, const IntPoly& base, int branch);

// Symmetric matrix assignments whose row multisets reproduce the inputs,
// found by exact backtracking; throws input_error when none exists.
XiRecovery match_xi(const std::vector<FactorMultiset>& multisets);

// End to end: specialize P' per branch, peel against the projected
// one-branch P', and match.
XiRecovery recover_xi(const CProvider& p, const ValueSemigroup& s);

}  // namespace semicurve
