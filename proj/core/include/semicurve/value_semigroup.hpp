#pragma once

#include <optional>
#include <vector>

#include "semicurve/exponent.hpp"

namespace semicurve {

struct MaximalProfile {
    bool in_semigroup = false;
    bool is_maximal = false;
    bool is_absolute = false;
    bool is_relative = false;
};

// Symmetric table of pairwise intersection multiplicities, zero diagonal.
struct XiMatrix {
    int r = 0;
    std::vector<std::vector<long long>> xi;

    bool operator==(const XiMatrix& o) const { return r == o.r && xi == o.xi; }
};

struct SymmetryReport {
    bool gorenstein = false;
    // witness of strict inequality c(v) + c(delta - v - 1) < r, if any
    std::optional<Expo> witness;
    long long witness_sum = 0;
};

// Finite encoding of a value semigroup S of a curve with r branches:
// conductor delta and a membership bitset over the lattice box [0, delta].
// Membership of an arbitrary v >= 0 is decided by the clip rule
// v in S  iff  min(v, delta) in S.
class ValueSemigroup {
  public:
    // Guard against accidentally huge lattice boxes (overridable via the CLI).
    static long long max_box_points;

    static ValueSemigroup validate(int r, Expo delta, const std::vector<Expo>& points);

    int r() const { return r_; }
    const Expo& delta() const { return delta_; }
    bool contains(const Expo& v) const;
    std::vector<Expo> points() const;  // members of [0, delta], graded-lex order

    // Emptiness / witnesses of Delta^J(v): members agreeing with v off J and
    // strictly larger on J. J is a bitmask over {0,...,r-1}.
    bool delta_super_nonempty(const Expo& v, unsigned mask_j) const;
    std::vector<Expo> delta_set_super(const Expo& v, unsigned mask_j, const Box& report) const;
    std::vector<Expo> delta_set_sub(const Expo& v, unsigned mask_j, const Box& report) const;
    std::vector<Expo> delta_set_union(const Expo& v, const Box& report) const;

    MaximalProfile classify(const Expo& v) const;

    // c(v) via the maximal-chain formula over proper subsets of I.
    long long c_chain(const Expo& v) const;
    // c(v, i) via existence of a witness w in S with w_i = v_i, w >= v.
    int c_axis(const Expo& v, int i) const;
    // ell(v) as the sum of c(.,i) along a monotone lattice path to clip(v, 0);
    // asserts path independence on two canonical paths.
    long long ell(const Expo& v) const;

    // Projection onto a nonempty keep-set of branch indices, with the minimal
    // conductor recomputed.
    ValueSemigroup project(const std::vector<int>& keep) const;

    XiMatrix xi_oracle() const;
    SymmetryReport symmetry_check() const;

  private:
    ValueSemigroup() = default;

    size_t index_of(const Expo& v) const;
    long long ell_along(const Expo& target, bool reverse_axis_order) const;

    int r_ = 0;
    Expo delta_;
    std::vector<long long> stride_;
    std::vector<bool> member_;  // over [0, delta]
};

}  // namespace semicurve
