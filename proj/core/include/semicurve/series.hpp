#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semicurve/multipoly.hpp"
#include "semicurve/provider.hpp"

namespace semicurve {

enum class Status { Pass, Fail, Inconclusive, NotApplicable };

std::string status_name(Status s);

struct CheckResult {
    std::string name;
    Status status = Status::Pass;
    std::string detail;
    std::optional<Expo> witness;
    std::string expected, actual;
};

// L(t) = sum c(v) t^v on the requested box (may reach down to -1).
IntPoly series_L(const CProvider& p, const Box& box);

// P'(t) = prod (t_i - 1) * L, evaluated coefficientwise by inclusion-
// exclusion; exact polynomial supported in [0, delta] (asserted on a shell
// with margin one).
IntPoly poly_P_prime(const CProvider& p);

// Poincare polynomial P = P' / (t_1...t_r - 1), built directly from the
// pivot formula. pivot = -1 computes all pivots and asserts independence and
// the product identity. For r = 1 the result is the truncated series
// sum_{n in S} t^n on [0, r1_hi] (default delta + 2).
IntPoly poly_P(const CProvider& p, int pivot = -1, std::optional<long long> r1_hi = {});

// P~ = prod (t_i - 1) * L~ with L~ supported on N^r; exact polynomial.
IntPoly poly_P_tilde(const CProvider& p);
IntPoly series_L_tilde(const CProvider& p, const Box& box);

// H(t) = sum ell(v) t^v over N^r.
IntPoly series_H(const CProvider& p, const Box& box);

// Terms of P~ grouped by support pattern J = {i : v_i > 0} (bitmask keys).
std::map<unsigned, IntPoly> lambda_decomposition(const IntPoly& ptilde);

// P' of a one-branch semigroup from a minimal generator list, via the
// telescoping product formula; cross-checked against direct enumeration.
IntPoly one_branch_product(const std::vector<long long>& generators);

// Named classical identity checks:
//   pi-independence, functional-equation, maximal-coeff, theorem-uno,
//   cor-h, projection
std::vector<CheckResult> check_identity(const CProvider& p, const ValueSemigroup& s,
                                        const std::string& which);

const std::vector<std::string>& classical_check_names();

}  // namespace semicurve
