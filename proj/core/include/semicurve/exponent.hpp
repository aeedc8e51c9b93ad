#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semicurve/numeric.hpp"

namespace semicurve {

// Integer exponent / value vector of a fixed length r.
using Expo = std::vector<long long>;

inline Expo expo_const(int r, long long v) { return Expo(static_cast<size_t>(r), v); }
inline Expo expo_zero(int r) { return expo_const(r, 0); }
inline Expo expo_ones(int r) { return expo_const(r, 1); }
inline Expo expo_unit(int r, int i) {
    Expo e = expo_zero(r);
    e[static_cast<size_t>(i)] = 1;
    return e;
}
// Indicator vector of a subset given as a bitmask over {0,...,r-1}.
inline Expo expo_mask(int r, unsigned mask) {
    Expo e = expo_zero(r);
    for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) e[static_cast<size_t>(i)] = 1;
    return e;
}

inline void check_same_r(const Expo& a, const Expo& b) {
    if (a.size() != b.size()) throw dimension_error("exponent vectors of different length");
}

inline Expo operator+(const Expo& a, const Expo& b) {
    check_same_r(a, b);
    Expo c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}
inline Expo operator-(const Expo& a, const Expo& b) {
    check_same_r(a, b);
    Expo c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

// Componentwise partial order.
inline bool leq(const Expo& a, const Expo& b) {
    check_same_r(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline Expo join(const Expo& a, const Expo& b) {
    check_same_r(a, b);
    Expo c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}
inline Expo meet(const Expo& a, const Expo& b) {
    check_same_r(a, b);
    Expo c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = std::min(a[i], b[i]);
    return c;
}
// Componentwise max with zero.
inline Expo clip_nonneg(const Expo& a) {
    Expo c(a);
    for (auto& x : c) x = std::max(x, 0LL);
    return c;
}
inline bool is_nonneg(const Expo& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x >= 0; });
}
inline long long total_degree(const Expo& a) {
    long long s = 0;
    for (auto x : a) s += x;
    return s;
}

// Graded lexicographic order: total degree first, then lex. Fixed once so that
// printed polynomials and golden files are deterministic.
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        long long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Inclusive lattice box [lo, hi].
struct Box {
    Expo lo, hi;

    bool contains(const Expo& v) const { return leq(lo, v) && leq(v, hi); }
    bool empty() const { return !leq(lo, hi); }
    long long point_count() const {
        long long n = 1;
        for (size_t i = 0; i < lo.size(); ++i) {
            if (hi[i] < lo[i]) return 0;
            n *= hi[i] - lo[i] + 1;
        }
        return n;
    }
};

inline Box box_intersect(const Box& a, const Box& b) {
    return Box{join(a.lo, b.lo), meet(a.hi, b.hi)};
}

// Calls f on every lattice point of [lo, hi], in lexicographic order.
inline void for_each_point(const Expo& lo, const Expo& hi,
                           const std::function<void(const Expo&)>& f) {
    if (!leq(lo, hi)) return;
    Expo v = lo;
    for (;;) {
        f(v);
        long i = static_cast<long>(v.size()) - 1;
        while (i >= 0) {
            size_t ui = static_cast<size_t>(i);
            if (v[ui] < hi[ui]) {
                ++v[ui];
                for (size_t j = ui + 1; j < v.size(); ++j) v[j] = lo[j];
                break;
            }
            --i;
        }
        if (i < 0) return;
    }
}

inline std::string to_string(const Expo& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace semicurve
