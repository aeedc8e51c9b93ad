#include "semicurve/value_semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace semicurve {

long long ValueSemigroup::max_box_points = 1'000'000;

namespace {

std::vector<long long> make_strides(const Expo& delta) {
    std::vector<long long> stride(delta.size());
    long long s = 1;
    for (size_t i = delta.size(); i-- > 0;) {
        stride[i] = s;
        s *= delta[i] + 1;
    }
    return stride;
}

long long box_size(const Expo& delta) {
    long long n = 1;
    for (auto d : delta) n *= d + 1;
    return n;
}

}  // namespace

size_t ValueSemigroup::index_of(const Expo& v) const {
    long long idx = 0;
    for (size_t i = 0; i < v.size(); ++i) idx += v[i] * stride_[i];
    return static_cast<size_t>(idx);
}

ValueSemigroup ValueSemigroup::validate(int r, Expo delta, const std::vector<Expo>& points) {
    if (r < 1) throw input_error("branch count must be >= 1");
    if (static_cast<int>(delta.size()) != r) throw input_error("conductor length != r");
    if (!is_nonneg(delta)) throw input_error("conductor must be nonnegative");
    if (box_size(delta) > max_box_points)
        throw input_error("lattice box [0, delta] exceeds the configured size cap");

    ValueSemigroup s;
    s.r_ = r;
    s.delta_ = delta;
    s.stride_ = make_strides(delta);
    s.member_.assign(static_cast<size_t>(box_size(delta)), false);

    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != r) throw input_error("point length != r");
        if (!is_nonneg(p) || !leq(p, delta))
            throw input_error("point " + to_string(p) + " outside [0, delta]");
        s.member_[s.index_of(p)] = true;
    }

    if (!s.member_[s.index_of(expo_zero(r))]) throw input_error("0 not in S");
    if (!s.member_[s.index_of(delta)]) throw input_error("conductor not in S");

    // clipped closure
    auto members = s.points();
    for (const auto& u : members)
        for (const auto& w : members) {
            Expo sum = meet(u + w, delta);
            if (!s.member_[s.index_of(sum)])
                throw input_error("closure violation: " + to_string(u) + " + " + to_string(w) +
                                  " clips to a non-member");
        }

    // conductor minimality: delta - 1_i must fail for every i with delta_i > 0
    for (int i = 0; i < r; ++i) {
        if (delta[static_cast<size_t>(i)] == 0) continue;
        Expo lo = delta;
        lo[static_cast<size_t>(i)] -= 1;
        bool all = true;
        for_each_point(lo, delta, [&](const Expo& v) {
            if (!s.member_[s.index_of(v)]) all = false;
        });
        if (all)
            throw input_error("conductor not minimal: delta - 1_" + std::to_string(i + 1) +
                              " already has the conductor property");
    }
    return s;
}

bool ValueSemigroup::contains(const Expo& v) const {
    if (static_cast<int>(v.size()) != r_) throw dimension_error("point length != r");
    if (!is_nonneg(v)) return false;
    return member_[index_of(meet(v, delta_))];
}

std::vector<Expo> ValueSemigroup::points() const {
    std::vector<Expo> out;
    for_each_point(expo_zero(r_), delta_, [&](const Expo& v) {
        if (member_[index_of(v)]) out.push_back(v);
    });
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

bool ValueSemigroup::delta_super_nonempty(const Expo& v, unsigned mask_j) const {
    // Members agreeing with v off J are impossible if v is negative there.
    for (int i = 0; i < r_; ++i)
        if (!(mask_j & (1u << i)) && v[static_cast<size_t>(i)] < 0) return false;
    // A witness, if any, has one inside the clipped search window: coordinates
    // beyond max(v_i, delta_i) + 1 can be lowered without leaving S.
    Expo lo(v), hi(v);
    for (int i = 0; i < r_; ++i) {
        size_t ui = static_cast<size_t>(i);
        if (mask_j & (1u << i)) {
            lo[ui] = v[ui] + 1;
            hi[ui] = std::max(v[ui] + 1, delta_[ui] + 1);
        }
    }
    bool found = false;
    for_each_point(lo, hi, [&](const Expo& w) {
        if (!found && contains(w)) found = true;
    });
    return found;
}

std::vector<Expo> ValueSemigroup::delta_set_super(const Expo& v, unsigned mask_j,
                                                  const Box& report) const {
    std::vector<Expo> out;
    for_each_point(report.lo, report.hi, [&](const Expo& w) {
        if (!contains(w)) return;
        for (int i = 0; i < r_; ++i) {
            size_t ui = static_cast<size_t>(i);
            if (mask_j & (1u << i)) {
                if (w[ui] <= v[ui]) return;
            } else if (w[ui] != v[ui]) {
                return;
            }
        }
        out.push_back(w);
    });
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<Expo> ValueSemigroup::delta_set_sub(const Expo& v, unsigned mask_j,
                                                const Box& report) const {
    unsigned full = (1u << r_) - 1;
    return delta_set_super(v, full & ~mask_j, report);
}

std::vector<Expo> ValueSemigroup::delta_set_union(const Expo& v, const Box& report) const {
    std::set<Expo> acc;
    unsigned full = (1u << r_) - 1;
    for (int i = 0; i < r_; ++i) {
        auto part = delta_set_super(v, full & ~(1u << i), report);
        acc.insert(part.begin(), part.end());
    }
    std::vector<Expo> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

MaximalProfile ValueSemigroup::classify(const Expo& v) const {
    MaximalProfile p;
    p.in_semigroup = contains(v);
    if (!p.in_semigroup) return p;

    // Maximality is emptiness of Delta_{i}(v) = Delta^{I minus i}(v) for
    // every i: an element of S equal to v in coordinate i and strictly
    // larger everywhere else. (The coefficient classification of P forces
    // this reading; the singleton-superscript one misclassifies the
    // relative maximals of the ordinary triple point.)
    unsigned full = (1u << r_) - 1;
    bool maximal = true;
    for (int i = 0; i < r_ && maximal; ++i)
        if (delta_super_nonempty(v, full & ~(1u << i))) maximal = false;
    p.is_maximal = maximal;
    if (!maximal) return p;

    // absolute: Delta^K(v) empty for every proper nonempty K
    // relative: Delta^K(v) nonempty for every K with #K <= r - 2
    bool absolute = true, relative = true;
    for (unsigned k = 1; k < full; ++k)
        if (delta_super_nonempty(v, k)) absolute = false;
    for (unsigned k = 0; k < full; ++k)
        if (__builtin_popcount(k) <= r_ - 2 && !delta_super_nonempty(v, k)) relative = false;
    p.is_absolute = absolute;
    p.is_relative = relative;
    return p;
}

long long ValueSemigroup::c_chain(const Expo& v) const {
    unsigned full = (1u << r_) - 1;
    // qualifying proper subsets K of I with Delta^K(v) nonempty
    std::vector<bool> ok(full, false);
    for (unsigned k = 0; k < full; ++k) ok[k] = delta_super_nonempty(v, k);
    // longest strictly increasing chain of qualifying subsets
    std::vector<long long> len(full, 0);
    std::vector<unsigned> order(full);
    for (unsigned k = 0; k < full; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    long long best = 0;
    for (unsigned k : order) {
        if (!ok[k]) continue;
        long long l = 1;
        for (unsigned sub = (k - 1) & k; ; sub = (sub - 1) & k) {
            if (sub != k && len[sub] > 0) l = std::max(l, len[sub] + 1);
            if (sub == 0) break;
        }
        if (k == 0) l = 1;
        len[k] = l;
        best = std::max(best, l);
    }
    return best;
}

int ValueSemigroup::c_axis(const Expo& v, int i) const {
    size_t ui = static_cast<size_t>(i);
    if (v[ui] < 0) return 0;
    Expo lo(v), hi(v);
    for (int j = 0; j < r_; ++j) {
        if (j == i) continue;
        size_t uj = static_cast<size_t>(j);
        lo[uj] = std::max(v[uj], 0LL);
        hi[uj] = std::max({v[uj], delta_[uj]}) + 1;
    }
    bool found = false;
    for_each_point(lo, hi, [&](const Expo& w) {
        if (!found && contains(w)) found = true;
    });
    return found ? 1 : 0;
}

long long ValueSemigroup::ell_along(const Expo& target, bool reverse) const {
    Expo u = expo_zero(r_);
    long long total = 0;
    for (int step = 0; step < r_; ++step) {
        int i = reverse ? r_ - 1 - step : step;
        size_t ui = static_cast<size_t>(i);
        while (u[ui] < target[ui]) {
            total += c_axis(u, i);
            ++u[ui];
        }
    }
    return total;
}

long long ValueSemigroup::ell(const Expo& v) const {
    Expo t = clip_nonneg(v);
    long long a = ell_along(t, false);
    long long b = ell_along(t, true);
    if (a != b)
        throw input_error("path independence violated at " + to_string(v) +
                          ": inconsistent semigroup data");
    return a;
}

ValueSemigroup ValueSemigroup::project(const std::vector<int>& keep) const {
    if (keep.empty()) throw input_error("projection keep-set must be nonempty");
    for (int i : keep)
        if (i < 0 || i >= r_) throw input_error("projection index out of range");

    int ra = static_cast<int>(keep.size());
    std::vector<int> drop;
    for (int j = 0; j < r_; ++j)
        if (std::find(keep.begin(), keep.end(), j) == keep.end()) drop.push_back(j);

    Expo top(ra);
    for (int k = 0; k < ra; ++k) top[static_cast<size_t>(k)] = delta_[static_cast<size_t>(keep[static_cast<size_t>(k)])];

    // membership of S_A on [0, pr_A(delta)] by bounded witness search
    auto member = [&](const Expo& w) {
        Expo lo = expo_zero(r_), hi = expo_zero(r_);
        for (int k = 0; k < ra; ++k) {
            size_t src = static_cast<size_t>(keep[static_cast<size_t>(k)]);
            lo[src] = hi[src] = w[static_cast<size_t>(k)];
        }
        for (int j : drop) hi[static_cast<size_t>(j)] = delta_[static_cast<size_t>(j)] + 1;
        bool found = false;
        for_each_point(lo, hi, [&](const Expo& v) {
            if (!found && contains(v)) found = true;
        });
        return found;
    };

    auto strides = make_strides(top);
    long long n = box_size(top);
    std::vector<bool> mem(static_cast<size_t>(n), false);
    auto idx = [&](const Expo& w) {
        long long s = 0;
        for (size_t i = 0; i < w.size(); ++i) s += w[i] * strides[i];
        return static_cast<size_t>(s);
    };
    for_each_point(expo_zero(ra), top, [&](const Expo& w) { mem[idx(w)] = member(w); });

    // up-closed "conductor property holds from here" flag; points beyond
    // pr_A(delta) are in S_A by the conductor of S
    std::vector<bool> good(static_cast<size_t>(n), false);
    {
        std::vector<Expo> pts;
        for_each_point(expo_zero(ra), top, [&](const Expo& w) { pts.push_back(w); });
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            const Expo& w = *it;
            bool g = mem[idx(w)];
            for (int k = 0; k < ra && g; ++k) {
                size_t uk = static_cast<size_t>(k);
                if (w[uk] < top[uk]) {
                    Expo w2 = w;
                    ++w2[uk];
                    g = good[idx(w2)];
                }
            }
            good[idx(w)] = g;
        }
    }

    Expo cond(ra);
    for (int k = 0; k < ra; ++k) {
        long long m = -1;
        for_each_point(expo_zero(ra), top, [&](const Expo& w) {
            if (!good[idx(w)]) return;
            size_t uk = static_cast<size_t>(k);
            if (m < 0 || w[uk] < m) m = w[uk];
        });
        if (m < 0) throw input_error("projection: no conductor found");
        cond[static_cast<size_t>(k)] = m;
    }
    if (!good[idx(cond)]) throw input_error("projection: conductor candidate fails");

    std::vector<Expo> pts;
    for_each_point(expo_zero(ra), cond, [&](const Expo& w) {
        if (mem[idx(meet(w, top))]) pts.push_back(w);
    });
    return validate(ra, cond, pts);
}

XiMatrix ValueSemigroup::xi_oracle() const {
    if (r_ < 2) throw input_error("xi matrix needs r >= 2");
    XiMatrix m;
    m.r = r_;
    m.xi.assign(static_cast<size_t>(r_), std::vector<long long>(static_cast<size_t>(r_), 0));

    std::vector<long long> branch_delta(static_cast<size_t>(r_));
    for (int i = 0; i < r_; ++i) branch_delta[static_cast<size_t>(i)] = project({i}).delta()[0];

    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < r_; ++j) {
            ValueSemigroup pair = project({i, j});
            long long xi_ij = pair.delta()[0] - branch_delta[static_cast<size_t>(i)];
            long long xi_ji = pair.delta()[1] - branch_delta[static_cast<size_t>(j)];
            if (xi_ij != xi_ji || xi_ij <= 0)
                throw input_error("intersection multiplicities asymmetric between branches " +
                                  std::to_string(i + 1) + " and " + std::to_string(j + 1));
            m.xi[static_cast<size_t>(i)][static_cast<size_t>(j)] = xi_ij;
            m.xi[static_cast<size_t>(j)][static_cast<size_t>(i)] = xi_ij;
        }

    for (int i = 0; i < r_; ++i) {
        long long row = branch_delta[static_cast<size_t>(i)];
        for (int j = 0; j < r_; ++j) row += m.xi[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (row != delta_[static_cast<size_t>(i)])
            throw input_error("conductor row inconsistency at branch " + std::to_string(i + 1) +
                              ": input is not of plane-curve type");
    }
    return m;
}

SymmetryReport ValueSemigroup::symmetry_check() const {
    SymmetryReport rep;
    rep.gorenstein = true;
    Expo lo = expo_const(r_, -1);
    bool violated = false;
    Expo bad;
    long long bad_sum = 0;
    for_each_point(lo, delta_, [&](const Expo& v) {
        long long s = c_chain(v) + c_chain(delta_ - v - expo_ones(r_));
        if (s > r_) {
            violated = true;
            bad = v;
            bad_sum = s;
        } else if (s < r_ && rep.gorenstein) {
            rep.gorenstein = false;
            rep.witness = v;
            rep.witness_sum = s;
        }
    });
    if (violated)
        throw input_error("symmetry inequality violated at " + to_string(bad) + " (sum " +
                          std::to_string(bad_sum) + "): invalid semigroup data");
    return rep;
}

}  // namespace semicurve
