#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "semicurve/exponent.hpp"
#include "semicurve/qlaurent.hpp"

namespace semicurve {

// Sparse multivariate Laurent polynomial with exact coefficients C (Int or
// QLaurent). An instance may carry a certification box: coefficients are then
// correct exactly on [box.lo, box.hi] and terms outside the box are absent.
// Objects without a box are exact polynomials.
template <class C>
class MultiPoly {
  public:
    using TermMap = std::map<Expo, C, GradedLexLess>;

    explicit MultiPoly(int r) : r_(r) {}

    static MultiPoly constant(int r, C c) {
        MultiPoly p(r);
        p.set(expo_zero(r), std::move(c));
        return p;
    }
    static MultiPoly one(int r) { return constant(r, C(1)); }
    static MultiPoly monomial(int r, const Expo& v, C c = C(1)) {
        MultiPoly p(r);
        p.set(v, std::move(c));
        return p;
    }

    int r() const { return r_; }
    const TermMap& terms() const { return terms_; }
    const std::optional<Box>& box() const { return box_; }
    bool truncated() const { return box_.has_value(); }
    bool is_zero() const { return terms_.empty(); }

    void set_box(Box b) {
        box_ = std::move(b);
        clip_to_box();
    }
    void clear_box() { box_.reset(); }

    C coeff(const Expo& v) const {
        auto it = terms_.find(v);
        return it == terms_.end() ? C(0) : it->second;
    }

    void set(const Expo& v, C c) {
        if (static_cast<int>(v.size()) != r_) throw dimension_error("exponent length != r");
        if (coeff_is_zero(c)) terms_.erase(v);
        else terms_[v] = std::move(c);
    }
    void add_term(const Expo& v, const C& c) {
        auto it = terms_.find(v);
        if (it == terms_.end()) {
            if (!coeff_is_zero(c)) terms_[v] = c;
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const { return add_sub(o, false); }
    MultiPoly operator-(const MultiPoly& o) const { return add_sub(o, true); }
    MultiPoly operator-() const {
        MultiPoly p(r_);
        p.box_ = box_;
        for (const auto& [v, c] : terms_) p.terms_[v] = C(0) - c;
        return p;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_compat(o);
        MultiPoly p(r_);
        for (const auto& [v1, c1] : terms_)
            for (const auto& [v2, c2] : o.terms_) p.add_term(v1 + v2, c1 * c2);
        if (box_ || o.box_) p.set_box(mul_box(o));
        return p;
    }

    MultiPoly scaled(const C& c) const {
        MultiPoly p(r_);
        p.box_ = box_;
        for (const auto& [v, a] : terms_) p.add_term(v, a * c);
        return p;
    }

    // t_i := 1 (collapse the i-th exponent) or t_i := 0 (keep the v_i = 0
    // slice). The result has r-1 variables. Substituting 1 into a truncated
    // object would silently drop the unknown tail, so it is rejected.
    MultiPoly specialize_unit(int i, bool value_one) const {
        if (i < 0 || i >= r_) throw range_error("branch index out of range");
        if (value_one && box_)
            throw range_error("cannot substitute t_i = 1 into a truncated series");
        MultiPoly p(r_ - 1);
        for (const auto& [v, c] : terms_) {
            if (!value_one) {
                if (v[static_cast<size_t>(i)] < 0)
                    throw range_error("t_i = 0 substitution with a negative exponent");
                if (v[static_cast<size_t>(i)] != 0) continue;
            }
            p.add_term(drop_coord(v, i), c);
        }
        if (box_) p.set_box(Box{drop_coord(box_->lo, i), drop_coord(box_->hi, i)});
        return p;
    }

    // (-1)^r * t^delta * p(t_1^{-1}, ..., t_r^{-1}); exponent v -> delta - v.
    MultiPoly reciprocal_transform(const Expo& delta) const {
        if (box_) throw range_error("reciprocal transform needs an exact polynomial");
        if (static_cast<int>(delta.size()) != r_) throw dimension_error("delta length != r");
        C sign = (r_ % 2 == 0) ? C(1) : C(-1);
        MultiPoly p(r_);
        for (const auto& [v, c] : terms_) p.set(delta - v, sign * c);
        return p;
    }

    // Embed into nvars variables, coordinate k of this poly becoming
    // coordinate where[k] of the result.
    MultiPoly embed(int nvars, const std::vector<int>& where) const {
        if (static_cast<int>(where.size()) != r_) throw dimension_error("embed map length != r");
        MultiPoly p(nvars);
        p.box_ = std::nullopt;
        for (const auto& [v, c] : terms_) {
            Expo w = expo_zero(nvars);
            for (int k = 0; k < r_; ++k) w[static_cast<size_t>(where[static_cast<size_t>(k)])] = v[static_cast<size_t>(k)];
            p.add_term(w, c);
        }
        if (box_) {
            // Coordinates not hit by the embedding carry no terms at all, so
            // they stay certified over a wide range.
            constexpr long long kWideCert = 1'000'000'000;
            Box b{expo_zero(nvars), expo_const(nvars, kWideCert)};
            for (int k = 0; k < r_; ++k) {
                b.lo[static_cast<size_t>(where[static_cast<size_t>(k)])] = box_->lo[static_cast<size_t>(k)];
                b.hi[static_cast<size_t>(where[static_cast<size_t>(k)])] = box_->hi[static_cast<size_t>(k)];
            }
            p.set_box(b);
        }
        return p;
    }

    bool operator==(const MultiPoly& o) const { return r_ == o.r_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Coefficientwise comparison restricted to a box; returns a differing
    // exponent on failure.
    static std::optional<Expo> first_difference(const MultiPoly& a, const MultiPoly& b,
                                                const Box& probe) {
        std::optional<Expo> bad;
        for_each_point(probe.lo, probe.hi, [&](const Expo& v) {
            if (bad) return;
            if (!coeff_is_zero(a.coeff(v) - b.coeff(v))) bad = v;
        });
        return bad;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [v, c] : terms_) {
            append_term(s, first, v, c);
            first = false;
        }
        return s;
    }

  private:
    void check_compat(const MultiPoly& o) const {
        if (r_ != o.r_) throw dimension_error("polynomials with different variable counts");
    }

    MultiPoly add_sub(const MultiPoly& o, bool sub) const {
        check_compat(o);
        MultiPoly p = *this;
        for (const auto& [v, c] : o.terms_) p.add_term(v, sub ? C(0) - c : c);
        if (box_ && o.box_) p.set_box(box_intersect(*box_, *o.box_));
        else if (box_) p.set_box(*box_);
        else if (o.box_) p.set_box(*o.box_);
        return p;
    }

    Expo supp_lo() const {
        Expo lo = terms_.begin()->first;
        for (const auto& [v, c] : terms_) lo = meet(lo, v);
        return lo;
    }
    Expo supp_hi() const {
        Expo hi = terms_.begin()->first;
        for (const auto& [v, c] : terms_) hi = join(hi, v);
        return hi;
    }

    // Certified box of a product. An exact factor contributes its true
    // support; a truncated factor may have unknown terms anywhere outside its
    // box, so certification shrinks accordingly.
    Box mul_box(const MultiPoly& o) const {
        if (box_ && o.box_) {
            // Both truncated. Sound under the stored-form invariant that a
            // truncated object has no support below box.lo.
            Box b{box_->lo + o.box_->lo, expo_zero(r_)};
            for (size_t i = 0; i < b.hi.size(); ++i)
                b.hi[i] = std::min(box_->hi[i] + o.box_->lo[i], o.box_->hi[i] + box_->lo[i]);
            return b;
        }
        const MultiPoly& trunc = box_ ? *this : o;
        const MultiPoly& exact = box_ ? o : *this;
        if (exact.terms_.empty())
            return *trunc.box_;  // zero polynomial: product exact anyway
        return Box{trunc.box_->lo + exact.supp_hi(), trunc.box_->hi + exact.supp_lo()};
    }

    void clip_to_box() {
        if (!box_) return;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (!box_->contains(it->first)) it = terms_.erase(it);
            else ++it;
        }
    }

    static Expo drop_coord(const Expo& v, int i) {
        Expo w;
        w.reserve(v.size() - 1);
        for (size_t k = 0; k < v.size(); ++k)
            if (static_cast<int>(k) != i) w.push_back(v[k]);
        return w;
    }

    static void append_term(std::string& s, bool first, const Expo& v, const Int& c) {
        Int a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono = monomial_str(v);
        if (mono.empty() || a != 1) {
            s += a.str();
            if (!mono.empty()) s += "*";
        }
        s += mono;
    }
    static void append_term(std::string& s, bool first, const Expo& v, const QLaurent& c) {
        if (!first) s += " + ";
        std::string mono = monomial_str(v);
        std::string cs = c.str();
        bool needs_parens = c.terms().size() > 1;
        if (mono.empty()) {
            s += needs_parens ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            s += mono;
        } else {
            s += (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    static std::string monomial_str(const Expo& v) {
        std::string m;
        int r = static_cast<int>(v.size());
        for (int i = 0; i < r; ++i) {
            long long e = v[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!m.empty()) m += "*";
            m += (r == 1) ? "t" : "t" + std::to_string(i + 1);
            if (e != 1) m += "^" + std::to_string(e);
        }
        return m;
    }

    int r_;
    TermMap terms_;
    std::optional<Box> box_;
};

using IntPoly = MultiPoly<Int>;
using QPoly = MultiPoly<QLaurent>;

// Lift an integer polynomial into the Q-coefficient ring.
inline QPoly lift_to_q(const IntPoly& p) {
    QPoly q(p.r());
    for (const auto& [v, c] : p.terms()) q.set(v, QLaurent(c));
    if (p.box()) q.set_box(*p.box());
    return q;
}

// Substitute Q := 1 coefficientwise.
inline IntPoly q_at_one(const QPoly& p) {
    IntPoly q(p.r());
    for (const auto& [v, c] : p.terms()) q.add_term(v, c.at_one());
    if (p.box()) q.set_box(*p.box());
    return q;
}

}  // namespace semicurve
