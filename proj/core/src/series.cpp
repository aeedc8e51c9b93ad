#include "semicurve/series.hpp"

#include <algorithm>
#include <numeric>

namespace semicurve {

namespace {

// Truncated series that are genuinely supported on N^r are certified far into
// the negative range: their coefficients there are zero by definition.
constexpr long long kNegPad = 1000;

int popcount(unsigned m) { return __builtin_popcount(m); }

Int parity(int k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

std::vector<int> mask_indices(int r, unsigned mask) {
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) idx.push_back(i);
    return idx;
}

CheckResult pass(std::string name, std::string detail = "") {
    return CheckResult{std::move(name), Status::Pass, std::move(detail), {}, "", ""};
}
CheckResult fail(std::string name, std::string detail, std::optional<Expo> witness = {},
                 std::string expected = "", std::string actual = "") {
    return CheckResult{std::move(name), Status::Fail,     std::move(detail),
                       std::move(witness), std::move(expected), std::move(actual)};
}
CheckResult not_applicable(std::string name, std::string detail) {
    return CheckResult{std::move(name), Status::NotApplicable, std::move(detail), {}, "", ""};
}

// Intersection of certification boxes, exact operands contributing nothing.
Box common_certified(const Box& probe, std::initializer_list<const IntPoly*> polys) {
    Box b = probe;
    for (const IntPoly* p : polys)
        if (p->box()) b = box_intersect(b, *p->box());
    return b;
}

CheckResult compare_on_box(std::string name, const IntPoly& lhs, const IntPoly& rhs,
                           const Box& probe, const std::string& detail) {
    Box b = common_certified(probe, {&lhs, &rhs});
    if (b.empty())
        return CheckResult{std::move(name), Status::Inconclusive,
                           "no common certified box for " + detail, {}, "", ""};
    auto diff = IntPoly::first_difference(lhs, rhs, b);
    if (!diff) return pass(std::move(name), detail);
    return fail(std::move(name), detail + ": coefficients differ", diff,
                lhs.coeff(*diff).str(), rhs.coeff(*diff).str());
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Inconclusive: return "INCONCLUSIVE";
        case Status::NotApplicable: return "N/A";
    }
    return "?";
}

IntPoly series_L(const CProvider& p, const Box& box) {
    IntPoly out(p.r());
    for_each_point(box.lo, box.hi, [&](const Expo& v) { out.add_term(v, Int(p.c(v))); });
    out.set_box(box);
    return out;
}

IntPoly poly_P_prime(const CProvider& p) {
    int r = p.r();
    Expo delta = p.delta();
    IntPoly out(r);
    unsigned full = (1u << r) - 1;
    Int sign_r = parity(r);
    for_each_point(expo_const(r, -1), delta + expo_ones(r), [&](const Expo& v) {
        Int val = 0;
        for (unsigned j = 0; j <= full; ++j)
            val += parity(popcount(j)) * Int(p.c(v - expo_mask(r, j)));
        val *= sign_r;
        if (val != 0) {
            if (!is_nonneg(v) || !leq(v, delta))
                throw input_error("P' support violation at " + to_string(v) +
                                  ": provider inconsistency");
            out.set(v, val);
        }
    });
    return out;
}

IntPoly poly_P(const CProvider& p, int pivot, std::optional<long long> r1_hi) {
    int r = p.r();
    Expo delta = p.delta();

    if (r == 1) {
        long long hi = r1_hi.value_or(delta[0] + 2);
        IntPoly out(1);
        for (long long v = 0; v <= hi; ++v)
            out.add_term(Expo{v}, Int(p.c_axis(Expo{v}, 0)));
        out.set_box(Box{Expo{-kNegPad}, Expo{hi}});
        return out;
    }

    unsigned full = (1u << r) - 1;
    Int sign_r = parity(r);
    auto pivot_poly = [&](int i) {
        IntPoly out(r);
        for_each_point(expo_const(r, -1), delta + expo_ones(r), [&](const Expo& v) {
            Int val = 0;
            for (unsigned j = 0; j <= full; ++j) {
                if (!(j & (1u << i))) continue;
                Expo w = v + expo_ones(r) - expo_mask(r, j);
                val += parity(popcount(j)) * Int(p.c_axis(w, i));
            }
            val *= sign_r;
            if (val != 0) {
                if (!is_nonneg(v) || !leq(v, delta))
                    throw input_error("P support violation at " + to_string(v) +
                                      ": provider inconsistency");
                out.set(v, val);
            }
        });
        return out;
    };

    if (pivot >= 0) return pivot_poly(pivot);

    IntPoly first = pivot_poly(0);
    for (int i = 1; i < r; ++i)
        if (pivot_poly(i) != first)
            throw input_error("pivot disagreement in P: provider inconsistency");
    return first;
}

IntPoly series_L_tilde(const CProvider& p, const Box& box) {
    if (!is_nonneg(box.lo)) throw range_error("L~ is supported on N^r");
    IntPoly out(p.r());
    for_each_point(box.lo, box.hi, [&](const Expo& v) { out.add_term(v, Int(p.c(v))); });
    out.set_box(Box{expo_const(p.r(), -kNegPad), box.hi});
    return out;
}

IntPoly poly_P_tilde(const CProvider& p) {
    int r = p.r();
    Expo delta = p.delta();
    IntPoly out(r);
    unsigned full = (1u << r) - 1;
    Int sign_r = parity(r);
    for_each_point(expo_zero(r), delta + expo_ones(r), [&](const Expo& v) {
        Int val = 0;
        for (unsigned j = 0; j <= full; ++j) {
            Expo w = v - expo_mask(r, j);
            if (!is_nonneg(w)) continue;  // L~ vanishes off N^r
            val += parity(popcount(j)) * Int(p.c(w));
        }
        val *= sign_r;
        if (val != 0) {
            if (!leq(v, delta))
                throw input_error("P~ support violation at " + to_string(v));
            out.set(v, val);
        }
    });
    return out;
}

IntPoly series_H(const CProvider& p, const Box& box) {
    if (!is_nonneg(box.lo)) throw range_error("H is supported on N^r");
    IntPoly out(p.r());
    for_each_point(box.lo, box.hi, [&](const Expo& v) { out.add_term(v, Int(p.ell(v))); });
    out.set_box(Box{expo_const(p.r(), -kNegPad), box.hi});
    return out;
}

std::map<unsigned, IntPoly> lambda_decomposition(const IntPoly& ptilde) {
    int r = ptilde.r();
    std::map<unsigned, IntPoly> parts;
    for (unsigned m = 0; m < (1u << r); ++m) parts.emplace(m, IntPoly(r));
    for (const auto& [v, c] : ptilde.terms()) {
        if (!is_nonneg(v)) throw range_error("P~ must be supported on N^r");
        unsigned m = 0;
        for (int i = 0; i < r; ++i)
            if (v[static_cast<size_t>(i)] > 0) m |= 1u << i;
        parts.at(m).add_term(v, c);
    }
    return parts;
}

IntPoly one_branch_product(const std::vector<long long>& generators) {
    if (generators.empty()) throw input_error("empty generator list");
    std::vector<long long> gens = generators;
    std::sort(gens.begin(), gens.end());
    for (long long g : gens)
        if (g < 1) throw input_error("generators must be positive");
    long long g0 = gens.front();
    long long gcd_all = 0;
    for (long long g : gens) gcd_all = std::gcd(gcd_all, g);
    if (gcd_all != 1) throw input_error("generators must have gcd 1");

    long long bound = gens.front() * gens.back() + gens.back() + 2;
    auto reachable = [&](const std::vector<long long>& gs, long long up) {
        std::vector<bool> in(static_cast<size_t>(up + 1), false);
        in[0] = true;
        for (long long n = 1; n <= up; ++n)
            for (long long g : gs)
                if (n >= g && in[static_cast<size_t>(n - g)]) {
                    in[static_cast<size_t>(n)] = true;
                    break;
                }
        return in;
    };
    // minimality of the generator list
    for (size_t k = 0; k < gens.size(); ++k) {
        std::vector<long long> rest;
        for (size_t j = 0; j < gens.size(); ++j)
            if (j != k) rest.push_back(gens[j]);
        if (!rest.empty()) {
            auto in = reachable(rest, gens[k]);
            if (in[static_cast<size_t>(gens[k])])
                throw input_error("generator list not minimal: " + std::to_string(gens[k]) +
                                  " is redundant");
        }
    }

    auto member = reachable(gens, bound);
    long long cond = 0;
    for (long long n = bound; n >= 1; --n)
        if (!member[static_cast<size_t>(n)]) { cond = n + 1; break; }

    long long d = cond + gens.back() + 2;

    // direct route: (t - 1) sum_{n in S} t^n
    std::vector<Int> direct(static_cast<size_t>(d + 1), Int(0));
    for (long long v = 0; v <= d; ++v) {
        bool in_v = v <= bound ? member[static_cast<size_t>(v)] : true;
        bool in_prev = v >= 1 && (v - 1 <= bound ? member[static_cast<size_t>(v - 1)] : true);
        direct[static_cast<size_t>(v)] = Int(in_prev ? 1 : 0) - Int(in_v ? 1 : 0);
    }

    // product route: (t-1) prod (1 - t^{N_k rho_k}) / ((1 - t^{rho_0}) prod (1 - t^{rho_k}))
    auto poly_mul = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> c(std::min<size_t>(a.size() + b.size() - 1, static_cast<size_t>(d + 1)),
                           Int(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size() && i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    auto binomial = [&](long long e, Int c0, Int ce) {
        std::vector<Int> b(static_cast<size_t>(e + 1), Int(0));
        b[0] = c0;
        b[static_cast<size_t>(e)] += ce;
        return b;
    };

    std::vector<Int> num = binomial(1, Int(-1), Int(1));  // t - 1
    std::vector<Int> den = binomial(g0, Int(1), Int(-1)); // 1 - t^{rho_0}
    long long e_prev = g0;
    for (size_t k = 1; k < gens.size(); ++k) {
        long long e_k = std::gcd(e_prev, gens[k]);
        long long n_k = e_prev / e_k;
        num = poly_mul(num, binomial(n_k * gens[k], Int(1), Int(-1)));
        den = poly_mul(den, binomial(gens[k], Int(1), Int(-1)));
        e_prev = e_k;
    }
    // series quotient up to degree d (den[0] = 1)
    std::vector<Int> quot(static_cast<size_t>(d + 1), Int(0));
    for (long long n = 0; n <= d; ++n) {
        Int acc = static_cast<size_t>(n) < num.size() ? num[static_cast<size_t>(n)] : Int(0);
        for (long long j = 1; j <= n && static_cast<size_t>(j) < den.size(); ++j)
            acc -= den[static_cast<size_t>(j)] * quot[static_cast<size_t>(n - j)];
        quot[static_cast<size_t>(n)] = acc;  // den[0] == 1
    }

    for (long long v = 0; v <= d; ++v)
        if (quot[static_cast<size_t>(v)] != direct[static_cast<size_t>(v)])
            throw input_error("product formula disagrees with direct enumeration at degree " +
                              std::to_string(v) + ": not a plane-branch-type semigroup");
    for (long long v = cond + 1; v <= d; ++v)
        if (quot[static_cast<size_t>(v)] != 0)
            throw input_error("one-branch P' fails to terminate past the conductor");

    IntPoly out(1);
    Int at_one = 0;
    for (long long v = 0; v <= cond; ++v) {
        out.add_term(Expo{v}, quot[static_cast<size_t>(v)]);
        at_one += quot[static_cast<size_t>(v)];
    }
    if (at_one == 0) throw input_error("one-branch P' divisible by t - 1");
    return out;
}

const std::vector<std::string>& classical_check_names() {
    static const std::vector<std::string> names = {
        "pi-independence", "functional-equation", "maximal-coeff",
        "theorem-uno",     "cor-h",               "projection"};
    return names;
}

namespace {

std::vector<CheckResult> check_pi_independence(const CProvider& p) {
    int r = p.r();
    std::vector<CheckResult> out;
    try {
        IntPoly pp = poly_P_prime(p);
        if (r == 1) {
            IntPoly pol = poly_P(p);
            IntPoly lhs = IntPoly::monomial(1, Expo{1}) - IntPoly::one(1);
            IntPoly prod = lhs * pol;
            out.push_back(compare_on_box("pi-independence", prod, pp,
                                         Box{expo_zero(1), p.delta() + expo_const(1, 2)},
                                         "(t - 1) P = P'"));
            return out;
        }
        IntPoly pol = poly_P(p, -1);  // asserts pivot independence internally
        IntPoly tprod = IntPoly::monomial(r, expo_ones(r)) - IntPoly::one(r);
        if (tprod * pol != pp) {
            out.push_back(fail("pi-independence", "(t_1...t_r - 1) P != P'"));
        } else {
            out.push_back(pass("pi-independence", "all pivots agree and (t_1...t_r - 1) P = P'"));
        }
    } catch (const input_error& e) {
        out.push_back(fail("pi-independence", e.what()));
    }
    return out;
}

std::vector<CheckResult> check_functional_equation(const CProvider& p, const ValueSemigroup& s) {
    std::vector<CheckResult> out;
    auto sym = s.symmetry_check();
    if (!sym.gorenstein) {
        out.push_back(not_applicable("functional-equation",
                                     "semigroup is not Gorenstein (witness " +
                                         to_string(*sym.witness) + ")"));
        return out;
    }
    int r = p.r();
    Expo delta = p.delta();
    IntPoly pp = poly_P_prime(p);
    IntPoly sum = pp + pp.reciprocal_transform(delta);
    if (!sum.is_zero()) {
        Expo w = sum.terms().begin()->first;
        out.push_back(fail("functional-equation", "P' + (-1)^r t^delta P'(1/t) != 0", w,
                           "0", sum.coeff(w).str()));
        return out;
    }
    if (r == 1) {
        out.push_back(pass("functional-equation",
                           "P' antisymmetric under v -> delta - v"));
        return out;
    }
    // coefficient form p(v) = (-1)^r p(tau - v); only the polynomial P of a
    // multi-branch curve is symmetric, the r = 1 series P is not
    Expo tau = delta - expo_ones(r);
    IntPoly pol = poly_P(p, -1);
    bool ok = true;
    Expo bad;
    if (is_nonneg(tau)) {
        for_each_point(expo_zero(r), tau, [&](const Expo& v) {
            if (ok && pol.coeff(v) != parity(r) * pol.coeff(tau - v)) {
                ok = false;
                bad = v;
            }
        });
    }
    if (!ok) {
        out.push_back(fail("functional-equation", "p(v) != (-1)^r p(tau - v)", bad,
                           (parity(r) * pol.coeff(tau - bad)).str(), pol.coeff(bad).str()));
    } else {
        out.push_back(pass("functional-equation",
                           "P' antisymmetric under v -> delta - v; p(v) = (-1)^r p(tau - v)"));
    }
    return out;
}

std::vector<CheckResult> check_maximal_coeff(const CProvider& p, const ValueSemigroup& s) {
    std::vector<CheckResult> out;
    int r = p.r();
    if (r == 1) {
        out.push_back(not_applicable("maximal-coeff", "classification applies to r >= 2"));
        return out;
    }
    IntPoly pol = poly_P(p);
    bool ok = true;
    Expo bad;
    Int expected_bad, actual_bad;
    IntPoly sum_max(r), sum_abs(r), sum_rel(r);
    for_each_point(expo_zero(r), p.delta(), [&](const Expo& v) {
        auto prof = s.classify(v);
        if (prof.is_maximal) sum_max.add_term(v, Int(1));
        if (prof.is_absolute) sum_abs.add_term(v, Int(1));
        if (prof.is_relative) sum_rel.add_term(v, Int(1));
        std::optional<Int> expected;
        if (!prof.in_semigroup || !prof.is_maximal) expected = Int(0);
        else if (prof.is_absolute) expected = Int(1);
        else if (prof.is_relative) expected = parity(r);
        // maximals that are neither absolute nor relative (possible for
        // r >= 4) are not pinned by the classification
        if (ok && expected && pol.coeff(v) != *expected) {
            ok = false;
            bad = v;
            expected_bad = *expected;
            actual_bad = pol.coeff(v);
        }
    });
    if (!ok) {
        out.push_back(fail("maximal-coeff", "coefficient disagrees with classification", bad,
                           expected_bad.str(), actual_bad.str()));
        return out;
    }
    if (r == 2 && pol != sum_max) {
        out.push_back(fail("maximal-coeff", "r = 2 closed form P = sum over maximals fails"));
        return out;
    }
    if (r == 3 && pol != sum_abs - sum_rel) {
        out.push_back(fail("maximal-coeff", "r = 3 closed form P = sum(abs) - sum(rel) fails"));
        return out;
    }
    out.push_back(pass("maximal-coeff", "coefficients match the maximal classification"));
    return out;
}

std::vector<CheckResult> check_theorem_uno(const CProvider& p, const ValueSemigroup& s) {
    std::vector<CheckResult> out;
    int r = p.r();
    if (r == 1) {
        IntPoly pt = poly_P_tilde(p);
        IntPoly pp = poly_P_prime(p);
        out.push_back(pt == pp ? pass("theorem-uno", "r = 1: P~ = P'")
                               : fail("theorem-uno", "r = 1: P~ != P'"));
        return out;
    }
    unsigned full = (1u << r) - 1;
    IntPoly pt = poly_P_tilde(p);
    IntPoly pp = poly_P_prime(p);

    IntPoly rhs1(r), rhs2(r);
    for (unsigned a = 1; a <= full; ++a) {
        auto keep = mask_indices(r, a);
        SemigroupProvider sub(s.project(keep));
        Int sgn = parity(r - popcount(a));
        rhs1 = rhs1 + poly_P_prime(sub).embed(r, keep).scaled(sgn);
        // Moebius inversion of the first direction: all signs collapse to +1
        rhs2 = rhs2 + poly_P_tilde(sub).embed(r, keep);
    }
    if (pt != rhs1) {
        out.push_back(fail("theorem-uno", "P~ != sum of signed projected P'"));
        return out;
    }
    if (pp != rhs2) {
        out.push_back(fail("theorem-uno", "P' != sum of signed projected P~"));
        return out;
    }
    out.push_back(pass("theorem-uno", "both directions hold exactly"));
    return out;
}

std::vector<CheckResult> check_cor_h(const CProvider& p, const ValueSemigroup& s) {
    std::vector<CheckResult> out;
    int r = p.r();
    Expo delta = p.delta();
    long long hi_all = *std::max_element(delta.begin(), delta.end()) + 2;
    Box probe{expo_zero(r), delta + expo_const(r, 2)};

    IntPoly h = series_H(p, Box{expo_zero(r), probe.hi});
    IntPoly factor = IntPoly::one(r);
    for (int i = 0; i < r; ++i)
        factor = factor * (IntPoly::one(r) - IntPoly::monomial(r, expo_unit(r, i)));
    IntPoly lhs = factor * h;

    IntPoly rhs(r);
    unsigned full = (1u << r) - 1;
    for (unsigned a = 1; a <= full; ++a) {
        auto keep = mask_indices(r, a);
        SemigroupProvider sub(s.project(keep));
        IntPoly psub = poly_P(sub, -1, hi_all);
        IntPoly piece = IntPoly::monomial(r, expo_mask(r, a)) * psub.embed(r, keep);
        rhs = rhs + piece.scaled(parity(popcount(a) - 1));
    }
    out.push_back(compare_on_box("cor-h", lhs, rhs, probe,
                                 "prod(1 - t_i) H = sum of signed t_A P_{S_A}"));
    return out;
}

std::vector<CheckResult> check_projection(const CProvider& p, const ValueSemigroup& s) {
    std::vector<CheckResult> out;
    int r = p.r();
    if (r < 2) {
        out.push_back(not_applicable("projection", "needs r >= 2"));
        return out;
    }
    XiMatrix xi;
    try {
        xi = s.xi_oracle();
    } catch (const input_error& e) {
        out.push_back(fail("projection", e.what()));
        return out;
    }
    Expo delta = p.delta();
    long long hi_all = *std::max_element(delta.begin(), delta.end()) + 2;
    IntPoly pol = poly_P(p);
    IntPoly pp = poly_P_prime(p);
    unsigned full = (1u << r) - 1;

    for (unsigned a = 1; a < full; ++a) {
        auto keep = mask_indices(r, a);
        int ra = popcount(a);
        // specialise t_i = 1 for i outside A, from the highest index down
        IntPoly lhs = pol;
        for (int i = r - 1; i >= 0; --i)
            if (!(a & (1u << i))) lhs = lhs.specialize_unit(i, true);

        SemigroupProvider sub(s.project(keep));
        IntPoly psub = poly_P(sub, -1, hi_all);
        IntPoly fac = IntPoly::one(ra);
        for (int j = 0; j < r; ++j) {
            if (a & (1u << j)) continue;
            Expo e(static_cast<size_t>(ra), 0);
            for (int k = 0; k < ra; ++k)
                e[static_cast<size_t>(k)] =
                    xi.xi[static_cast<size_t>(keep[static_cast<size_t>(k)])][static_cast<size_t>(j)];
            fac = fac * (IntPoly::one(ra) - IntPoly::monomial(ra, e));
        }
        IntPoly rhs = fac * psub;
        Box probe{expo_zero(ra), expo_const(ra, hi_all)};
        auto res = compare_on_box("projection", lhs, rhs, probe,
                                  "Cor 5.3 for keep-set mask " + std::to_string(a));
        if (res.status != Status::Pass) {
            out.push_back(std::move(res));
            return out;
        }

        // the same formula for P' when one variable is forgotten
        if (ra == r - 1) {
            IntPoly lhs2 = pp;
            for (int i = r - 1; i >= 0; --i)
                if (!(a & (1u << i))) lhs2 = lhs2.specialize_unit(i, true);
            IntPoly rhs2 = fac * poly_P_prime(sub);
            auto res2 = compare_on_box("projection", lhs2, rhs2, probe,
                                       "P' projection for keep-set mask " + std::to_string(a));
            if (res2.status != Status::Pass) {
                out.push_back(std::move(res2));
                return out;
            }
        }
    }
    out.push_back(pass("projection", "projection formula holds for every proper keep-set"));
    return out;
}

}  // namespace

std::vector<CheckResult> check_identity(const CProvider& p, const ValueSemigroup& s,
                                        const std::string& which) {
    if (which == "pi-independence") return check_pi_independence(p);
    if (which == "functional-equation") return check_functional_equation(p, s);
    if (which == "maximal-coeff") return check_maximal_coeff(p, s);
    if (which == "theorem-uno") return check_theorem_uno(p, s);
    if (which == "cor-h") return check_cor_h(p, s);
    if (which == "projection") return check_projection(p, s);
    throw input_error("unknown identity check: " + which);
}

}  // namespace semicurve
