#pragma once

#include <map>
#include <string>

#include "semicurve/numeric.hpp"

namespace semicurve {

// Integer Laurent polynomial in the single symbol Q. This is the coefficient
// ring for all generalised (motivic) series: every class that occurs lies in
// the subring generated by Q and Q^{-1}.
class QLaurent {
  public:
    QLaurent() = default;
    explicit QLaurent(Int c) {
        if (c != 0) terms_[0] = std::move(c);
    }
    QLaurent(long long c) : QLaurent(Int(c)) {}

    static QLaurent monomial(long long q_exp, Int c = Int(1)) {
        QLaurent x;
        if (c != 0) x.terms_[q_exp] = std::move(c);
        return x;
    }
    // Q^lo + Q^{lo+1} + ... + Q^{hi} (empty when hi < lo).
    static QLaurent power_range(long long lo, long long hi) {
        QLaurent x;
        for (long long e = lo; e <= hi; ++e) x.terms_[e] = 1;
        return x;
    }

    const std::map<long long, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    QLaurent operator+(const QLaurent& o) const {
        QLaurent x = *this;
        for (const auto& [e, c] : o.terms_) x.bump(e, c);
        return x;
    }
    QLaurent operator-(const QLaurent& o) const {
        QLaurent x = *this;
        for (const auto& [e, c] : o.terms_) x.bump(e, -c);
        return x;
    }
    QLaurent operator-() const {
        QLaurent x;
        for (const auto& [e, c] : terms_) x.terms_[e] = -c;
        return x;
    }
    QLaurent operator*(const QLaurent& o) const {
        QLaurent x;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) x.bump(e1 + e2, c1 * c2);
        return x;
    }

    // Exact division; throws when the remainder is nonzero.
    QLaurent exact_div(const QLaurent& d) const {
        if (d.is_zero()) throw divisibility_error("division by zero QLaurent");
        QLaurent rem = *this, quot;
        // divide from the top: leading term of d
        auto lead = std::prev(d.terms_.end());
        // an exact quotient cannot reach below this exponent; crossing it
        // means the division does not terminate (inexact in the Laurent ring)
        long long floor_e = is_zero() ? 0
                                      : terms_.begin()->first - d.terms_.begin()->first;
        while (!rem.is_zero()) {
            auto rl = std::prev(rem.terms_.end());
            if (rl->second % lead->second != 0)
                throw divisibility_error("inexact QLaurent division");
            long long e = rl->first - lead->first;
            if (e < floor_e) throw divisibility_error("inexact QLaurent division");
            Int c = rl->second / lead->second;
            quot.bump(e, c);
            rem = rem - QLaurent::monomial(e, c) * d;
        }
        return quot;
    }

    // Substitute Q := 1 (Euler-characteristic degeneration).
    Int at_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) { s += "-"; a = -a; }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono;
            if (e == 0) mono = "";
            else if (e == 1) mono = "Q";
            else mono = "Q^" + std::to_string(e);
            if (mono.empty() || a != 1) {
                s += a.str();
                if (!mono.empty()) s += "*";
            }
            s += mono;
        }
        return s;
    }

  private:
    void bump(long long e, const Int& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<long long, Int> terms_;  // Q-exponent -> integer coefficient
};

inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const QLaurent& c) { return c.is_zero(); }

}  // namespace semicurve
