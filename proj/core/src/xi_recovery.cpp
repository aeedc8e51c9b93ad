#include "semicurve/xi_recovery.hpp"

#include <algorithm>
#include <set>

#include "semicurve/series.hpp"

namespace semicurve {

namespace {

// dense ascending coefficient vector of an exact univariate polynomial
std::vector<Int> dense_coeffs(const IntPoly& p) {
    if (p.r() != 1) throw dimension_error("univariate polynomial expected");
    if (p.truncated()) throw range_error("exact polynomial expected");
    long long deg = 0;
    for (const auto& [v, c] : p.terms()) {
        if (v[0] < 0) throw range_error("negative exponent in univariate division");
        deg = std::max(deg, v[0]);
    }
    std::vector<Int> a(static_cast<size_t>(deg + 1), Int(0));
    for (const auto& [v, c] : p.terms()) a[static_cast<size_t>(v[0])] = c;
    return a;
}

// exact ascending long division; throws on a nonzero remainder. The divisor
// must have a nonzero constant term (all bases and binomials here do).
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den[0] == 0)
        throw divisibility_error("divisor must have a nonzero constant term");
    bool num_zero = std::all_of(num.begin(), num.end(), [](const Int& c) { return c == 0; });
    if (num_zero) return {Int(0)};
    if (num.size() < den.size()) throw divisibility_error("inexact polynomial division");
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (size_t n = 0; n < quot.size(); ++n) {
        Int c = num[n];
        if (c == 0) continue;
        if (c % den[0] != 0) throw divisibility_error("inexact polynomial division");
        Int q = c / den[0];
        quot[n] = q;
        for (size_t j = 0; j < den.size(); ++j) num[n + j] -= q * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw divisibility_error("inexact polynomial division");
    return quot;
}

}  // namespace

IntPoly specialize_branch(const IntPoly& pprime, int i) {
    if (pprime.r() == 1) return pprime;
    if (i < 0 || i >= pprime.r()) throw range_error("branch index out of range");
    IntPoly q = pprime;
    for (int j = pprime.r() - 1; j >= 0; --j)
        if (j != i) q = q.specialize_unit(j, true);
    return q;
}

FactorMultiset peel_binomial_factors(const IntPoly& q, const IntPoly& base, int branch) {
    std::vector<Int> quot = exact_div(dense_coeffs(q), dense_coeffs(base));
    FactorMultiset out;
    out.branch = branch;
    for (;;) {
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        if (quot.empty() || quot[0] != 1)
            throw divisibility_error("peeling left a quotient without constant term 1");
        if (quot.size() == 1) break;
        size_t z = 1;
        while (z < quot.size() && quot[z] == 0) ++z;
        Int m = -quot[z];
        if (m <= 0)
            throw divisibility_error("peeling met a positive low-order coefficient; input is "
                                     "not a product of factors 1 - t^z");
        std::vector<Int> factor(z + 1, Int(0));
        factor[0] = 1;
        factor[z] = -1;
        long long mult = static_cast<long long>(m);
        for (long long k = 0; k < mult; ++k) {
            quot = exact_div(std::move(quot), factor);
            out.zs.push_back(static_cast<long long>(z));
        }
    }
    std::sort(out.zs.begin(), out.zs.end());
    return out;
}

namespace {

using Multiset = std::multiset<long long>;

void search(int r, int i, int j, std::vector<Multiset>& rows,
            std::vector<std::vector<long long>>& xi, std::vector<XiMatrix>& found) {
    // all pairs (i, j) with i < j are placed once i reaches r - 1
    if (i >= r - 1) {
        for (const auto& row : rows)
            if (!row.empty()) return;
        found.push_back(XiMatrix{r, xi});
        return;
    }
    int ni = i, nj = j + 1;
    if (nj == r) { ++ni; nj = ni + 1; }
    // candidate values shared by the remaining multisets of rows i and j,
    // tried in ascending order for determinism
    long long prev = -1;
    for (long long z : rows[static_cast<size_t>(i)]) {
        if (z == prev) continue;
        prev = z;
        auto itj = rows[static_cast<size_t>(j)].find(z);
        if (itj == rows[static_cast<size_t>(j)].end()) continue;
        auto iti = rows[static_cast<size_t>(i)].find(z);
        rows[static_cast<size_t>(i)].erase(iti);
        rows[static_cast<size_t>(j)].erase(itj);
        xi[static_cast<size_t>(i)][static_cast<size_t>(j)] = z;
        xi[static_cast<size_t>(j)][static_cast<size_t>(i)] = z;
        search(r, ni, nj, rows, xi, found);
        xi[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
        xi[static_cast<size_t>(j)][static_cast<size_t>(i)] = 0;
        rows[static_cast<size_t>(i)].insert(z);
        rows[static_cast<size_t>(j)].insert(z);
    }
}

}  // namespace

XiRecovery match_xi(const std::vector<FactorMultiset>& multisets) {
    int r = static_cast<int>(multisets.size());
    if (r < 2) throw input_error("matching needs at least two branches");
    std::vector<Multiset> rows;
    for (const auto& m : multisets) {
        if (static_cast<int>(m.zs.size()) != r - 1)
            throw input_error("branch " + std::to_string(m.branch + 1) + " peeled " +
                              std::to_string(m.zs.size()) + " factors, expected " +
                              std::to_string(r - 1));
        rows.emplace_back(m.zs.begin(), m.zs.end());
    }
    std::vector<std::vector<long long>> xi(static_cast<size_t>(r),
                                           std::vector<long long>(static_cast<size_t>(r), 0));
    std::vector<XiMatrix> found;
    search(r, 0, 1, rows, xi, found);
    std::sort(found.begin(), found.end(),
              [](const XiMatrix& a, const XiMatrix& b) { return a.xi < b.xi; });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty()) throw input_error("no consistent symmetric assignment of the multisets");
    XiRecovery out;
    out.xi = found.front();
    out.ambiguous = found.size() > 1;
    out.all = std::move(found);
    return out;
}

XiRecovery recover_xi(const CProvider& p, const ValueSemigroup& s) {
    int r = p.r();
    if (r == 1) {
        XiRecovery out;
        out.xi = XiMatrix{1, {{0}}};
        out.all = {out.xi};
        return out;
    }
    IntPoly pp = poly_P_prime(p);
    std::vector<FactorMultiset> ms;
    for (int i = 0; i < r; ++i) {
        IntPoly q = specialize_branch(pp, i);
        SemigroupProvider sub(s.project({i}));
        IntPoly base = poly_P_prime(sub);
        ms.push_back(peel_binomial_factors(q, base, i));
    }
    return match_xi(ms);
}

}  // namespace semicurve
