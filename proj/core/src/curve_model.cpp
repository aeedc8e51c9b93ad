#include "semicurve/curve_model.hpp"

#include <algorithm>
#include <cassert>
#include <variant>

namespace semicurve {

namespace {

// Position order (n, i): truncation order first, branch second. A ring
// element is a flat vector of length r*N indexed by n*r + i.
template <class F>
class RingSpan {
  public:
    using Elem = typename F::Elem;

    RingSpan(F field, int r, long long n) : field_(field), r_(r), n_(n) {}

    size_t width() const { return static_cast<size_t>(r_ * n_); }

    std::vector<Elem> zero_vec() const { return std::vector<Elem>(width(), field_.zero()); }

    std::vector<Elem> unit() const {
        auto v = zero_vec();
        for (int i = 0; i < r_; ++i) v[static_cast<size_t>(i)] = field_.one();
        return v;
    }

    std::vector<Elem> from_series(const std::vector<BranchSeries>& comps) const {
        auto v = zero_vec();
        for (int i = 0; i < r_; ++i)
            for (const auto& t : comps[static_cast<size_t>(i)]) {
                if (t.exp < 0) throw input_error("negative exponent in branch series");
                if (t.exp >= n_) continue;
                size_t pos = static_cast<size_t>(t.exp * r_ + i);
                v[pos] = field_.add(v[pos], field_.from_pair(t.num, t.den));
            }
        return v;
    }

    // truncated branchwise product
    std::vector<Elem> mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
        auto v = zero_vec();
        for (int i = 0; i < r_; ++i)
            for (long long m = 0; m < n_; ++m) {
                size_t pa = static_cast<size_t>(m * r_ + i);
                if (field_.is_zero(a[pa])) continue;
                for (long long k = 0; m + k < n_; ++k) {
                    size_t pb = static_cast<size_t>(k * r_ + i);
                    if (field_.is_zero(b[pb])) continue;
                    size_t pc = static_cast<size_t>((m + k) * r_ + i);
                    v[pc] = field_.add(v[pc], field_.mul(a[pa], b[pb]));
                }
            }
        return v;
    }

    // Reduce v against an echelon basis (pivot -> row). Returns true if v is
    // nonzero after reduction; v is then normalised to pivot coefficient 1.
    bool reduce(std::vector<Elem>& v, const std::map<size_t, std::vector<Elem>>& rows) const {
        for (const auto& [piv, row] : rows) {
            if (field_.is_zero(v[piv])) continue;
            Elem f = v[piv];
            for (size_t p = piv; p < v.size(); ++p)
                v[p] = field_.sub(v[p], field_.mul(f, row[p]));
        }
        size_t piv = find_pivot(v);
        if (piv == v.size()) return false;
        Elem inv = field_.inv(v[piv]);
        for (size_t p = piv; p < v.size(); ++p) v[p] = field_.mul(v[p], inv);
        return true;
    }

    size_t find_pivot(const std::vector<Elem>& v) const {
        for (size_t p = 0; p < v.size(); ++p)
            if (!field_.is_zero(v[p])) return p;
        return v.size();
    }

    const F& field() const { return field_; }
    int r() const { return r_; }
    long long n() const { return n_; }

  private:
    F field_;
    int r_;
    long long n_;
};

template <class F>
struct ModelData {
    RingSpan<F> ring;
    std::map<size_t, std::vector<typename F::Elem>> basis;  // pivot -> row

    explicit ModelData(RingSpan<F> rs) : ring(std::move(rs)) {}

    bool insert(std::vector<typename F::Elem> v) {
        if (!ring.reduce(v, basis)) return false;
        size_t piv = ring.find_pivot(v);
        // keep earlier rows reduced against the new one
        for (auto& [p, row] : basis) {
            if (ring.field().is_zero(row[piv])) continue;
            auto f = row[piv];
            for (size_t q = piv; q < row.size(); ++q)
                row[q] = ring.field().sub(row[q], ring.field().mul(f, v[q]));
        }
        basis.emplace(piv, std::move(v));
        return true;
    }

    void build(const CurveSpec& spec) {
        if (spec.generators.empty()) throw input_error("no generators");
        insert(ring.unit());
        std::vector<std::vector<typename F::Elem>> gens;
        for (const auto& g : spec.generators) {
            auto v = ring.from_series(g);
            bool zero = std::all_of(v.begin(), v.end(),
                                    [&](const auto& x) { return ring.field().is_zero(x); });
            if (zero) throw input_error("degenerate input: a generator is the zero element");
            gens.push_back(v);
            insert(std::move(v));
        }
        // saturate under products until the span is multiplicatively closed
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<typename F::Elem>> rows;
            rows.reserve(basis.size());
            for (const auto& [p, row] : basis) rows.push_back(row);
            for (const auto& a : rows)
                for (const auto& g : gens)
                    if (insert(ring.mul(a, g))) grew = true;
        }
    }

    // Is the unit monomial t_i^n (zero on the other branches) in the span?
    bool contains_unit(int i, long long n) const {
        auto v = ring.zero_vec();
        v[static_cast<size_t>(n * ring.r() + i)] = ring.field().one();
        return !ring.reduce(v, basis);
    }

    // dim W - dim(W cap {ord >= v}) = rank of the projection of the basis
    // onto positions (n, i) with n < v_i.
    long long ell(const Expo& v) const {
        std::vector<size_t> cols;
        for (int i = 0; i < ring.r(); ++i) {
            long long vi = std::max(v[static_cast<size_t>(i)], 0LL);
            for (long long n = 0; n < vi; ++n) cols.push_back(static_cast<size_t>(n * ring.r() + i));
        }
        if (cols.empty()) return 0;
        std::vector<std::vector<typename F::Elem>> m;
        m.reserve(basis.size());
        for (const auto& [p, row] : basis) {
            std::vector<typename F::Elem> proj(cols.size());
            for (size_t c = 0; c < cols.size(); ++c) proj[c] = row[cols[c]];
            m.push_back(std::move(proj));
        }
        return rank(m);
    }

    long long rank(std::vector<std::vector<typename F::Elem>>& m) const {
        const F& f = ring.field();
        long long rk = 0;
        size_t ncols = m.empty() ? 0 : m.front().size();
        size_t row0 = 0;
        for (size_t col = 0; col < ncols && row0 < m.size(); ++col) {
            size_t sel = m.size();
            for (size_t r = row0; r < m.size(); ++r)
                if (!f.is_zero(m[r][col])) { sel = r; break; }
            if (sel == m.size()) continue;
            std::swap(m[row0], m[sel]);
            auto inv = f.inv(m[row0][col]);
            for (size_t c = col; c < ncols; ++c) m[row0][c] = f.mul(m[row0][c], inv);
            for (size_t r = 0; r < m.size(); ++r) {
                if (r == row0 || f.is_zero(m[r][col])) continue;
                auto fac = m[r][col];
                for (size_t c = col; c < ncols; ++c)
                    m[r][c] = f.sub(m[r][c], f.mul(fac, m[row0][c]));
            }
            ++row0;
            ++rk;
        }
        return rk;
    }
};

}  // namespace

struct AlgebraModel::Impl {
    std::variant<ModelData<RationalField>, ModelData<PrimeField>> data;
    int r = 0;
    long long n = 0;
    mutable std::map<Expo, long long> ell_memo;

    template <class Fn>
    auto visit(Fn&& fn) const {
        return std::visit(std::forward<Fn>(fn), data);
    }

    void check_range(const Expo& v) const {
        if (static_cast<int>(v.size()) != r) throw dimension_error("value vector length != r");
        for (auto x : v)
            if (x > n - 2)
                throw truncation_error("value " + std::to_string(x) +
                                           " beyond certified range N - 2 = " +
                                           std::to_string(n - 2),
                                       2 * n);
    }

    long long ell(const Expo& v) const {
        check_range(v);
        Expo key = clip_nonneg(v);
        auto it = ell_memo.find(key);
        if (it != ell_memo.end()) return it->second;
        long long d = visit([&](const auto& m) { return m.ell(key); });
        ell_memo.emplace(std::move(key), d);
        return d;
    }
};

AlgebraModel AlgebraModel::build(const CurveSpec& spec, long long truncation) {
    if (spec.mode != CurveSpec::Mode::parametrization)
        throw input_error("ring model requires a parametrization");
    if (truncation < 2) throw input_error("truncation order must be >= 2");
    int r = spec.branch_count();
    if (r < 1) throw input_error("at least one generator with at least one branch required");
    for (const auto& g : spec.generators)
        if (static_cast<int>(g.size()) != r)
            throw input_error("generators disagree on the branch count");
    if (!spec.field.rational && spec.field.p <= r)
        throw input_error("prime field must satisfy p > r");

    AlgebraModel model;
    model.impl_ = std::make_shared<Impl>(Impl{
        spec.field.rational
            ? std::variant<ModelData<RationalField>, ModelData<PrimeField>>(
                  ModelData<RationalField>(RingSpan<RationalField>({}, r, truncation)))
            : std::variant<ModelData<RationalField>, ModelData<PrimeField>>(
                  ModelData<PrimeField>(RingSpan<PrimeField>({spec.field.p}, r, truncation))),
        r, truncation, {}});
    std::visit([&](auto& m) { m.build(spec); }, model.impl_->data);
    return model;
}

int AlgebraModel::r() const { return impl_->r; }
long long AlgebraModel::truncation() const { return impl_->n; }
long long AlgebraModel::dimension() const {
    return impl_->visit([](const auto& m) { return static_cast<long long>(m.basis.size()); });
}

long long AlgebraModel::ell(const Expo& v) const { return impl_->ell(v); }

long long AlgebraModel::c(const Expo& v) const {
    return impl_->ell(v + expo_ones(impl_->r)) - impl_->ell(v);
}

int AlgebraModel::c_axis(const Expo& v, int i) const {
    return static_cast<int>(impl_->ell(v + expo_unit(impl_->r, i)) - impl_->ell(v));
}

bool AlgebraModel::member(const Expo& v) const {
    if (!is_nonneg(v)) return false;
    for (int i = 0; i < impl_->r; ++i)
        if (c_axis(v, i) == 0) return false;
    return true;
}

ValueSemigroup AlgebraModel::extract_semigroup() const {
    int r = impl_->r;
    long long n = impl_->n;

    // The conductor ideal is spanned by unit monomials: J(delta) lies in the
    // ring exactly when every t_i^m (zero on the other branches) with
    // m >= delta_i does. In the truncated model each such monomial appears
    // with a tail of order >= N; products of two of them push the tail
    // arbitrarily deep, so by completeness a run of unit monomials reaching
    // the truncation top certifies the full ideal. delta_i is the start of
    // that run, and it is minimal because t_i^{delta_i - 1} reduces to a
    // nonzero element.
    Expo delta(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        long long run_start = n;
        for (long long m = n - 1; m >= 0; --m) {
            bool in = impl_->visit([&](const auto& md) { return md.contains_unit(i, m); });
            if (!in) break;
            run_start = m;
        }
        if (run_start >= n - 1)
            throw truncation_error("no conductor run visible on branch " + std::to_string(i + 1),
                                   2 * n);
        if (run_start > n - 4)
            throw truncation_error("conductor too close to the truncation order", 2 * n);
        delta[static_cast<size_t>(i)] = run_start;
    }

    // consistency: c(w) = r on the shell [delta, delta + 1]
    for_each_point(delta, delta + expo_ones(r), [&](const Expo& w) {
        if (c(w) != r)
            throw input_error("conductor certificate inconsistent with c(" + to_string(w) + ")");
    });

    std::vector<Expo> pts;
    for_each_point(expo_zero(r), delta, [&](const Expo& v) {
        if (member(v)) pts.push_back(v);
    });
    return ValueSemigroup::validate(r, delta, pts);
}

long long default_truncation(const CurveSpec& spec) {
    long long maxord = 1;
    for (const auto& g : spec.generators)
        for (const auto& comp : g) {
            long long lowest = -1;
            for (const auto& t : comp)
                if (t.num != 0 && (lowest < 0 || t.exp < lowest)) lowest = t.exp;
            if (lowest >= 0) maxord = std::max(maxord, lowest);
        }
    return 4 * maxord + 8;
}

BuiltModel build_certified(const CurveSpec& spec, std::optional<long long> n_hint) {
    long long n = n_hint.value_or(default_truncation(spec));
    constexpr long long kCap = 512;
    for (;;) {
        AlgebraModel model = AlgebraModel::build(spec, n);
        try {
            ValueSemigroup s = model.extract_semigroup();
            return BuiltModel{std::move(model), std::move(s)};
        } catch (const truncation_error& e) {
            if (e.suggested_order > kCap) throw;
            n = e.suggested_order;
        }
    }
}

}  // namespace semicurve
