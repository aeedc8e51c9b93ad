#include "semicurve/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "semicurve/series.hpp"
#include "semicurve/xi_recovery.hpp"

namespace semicurve {

using nlohmann::json;

namespace {

std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<int64_t>::min();
    static const Int hi = std::numeric_limits<int64_t>::max();
    if (x >= lo && x <= hi) return static_cast<int64_t>(x);
    return x.str();
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw input_error(where + ": expected an integer");
}

json expo_to_json(const Expo& v) {
    json a = json::array();
    for (long long x : v) a.push_back(x);
    return a;
}

Expo expo_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array of integers");
    Expo v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error(where + ": expected an integer entry");
        v.push_back(x.get<long long>());
    }
    return v;
}

json poly_to_json(const IntPoly& p) {
    json out;
    json terms = json::array();
    for (const auto& [v, c] : p.terms()) terms.push_back(json::array({int_to_json(c), expo_to_json(v)}));
    out["terms"] = std::move(terms);
    if (p.box()) out["box"] = {{"lo", expo_to_json(p.box()->lo)}, {"hi", expo_to_json(p.box()->hi)}};
    return out;
}

json qlaurent_to_json(const QLaurent& c) {
    json a = json::array();
    for (const auto& [e, k] : c.terms()) a.push_back(json::array({e, int_to_json(k)}));
    return a;
}

json qpoly_to_json(const QPoly& p) {
    json out;
    json terms = json::array();
    for (const auto& [v, c] : p.terms())
        terms.push_back(json::array({qlaurent_to_json(c), expo_to_json(v)}));
    out["terms"] = std::move(terms);
    if (p.box()) out["box"] = {{"lo", expo_to_json(p.box()->lo)}, {"hi", expo_to_json(p.box()->hi)}};
    return out;
}

json xi_to_json(const XiMatrix& xi) {
    json rows = json::array();
    for (const auto& row : xi.xi) {
        json r = json::array();
        for (long long x : row) r.push_back(x);
        rows.push_back(std::move(r));
    }
    return rows;
}

BranchSeries branch_series_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected a list of [coefficient, exponent]");
    BranchSeries s;
    for (size_t k = 0; k < j.size(); ++k) {
        const auto& t = j[k];
        std::string at = where + "/" + std::to_string(k);
        if (!t.is_array() || t.size() != 2)
            throw input_error(at + ": expected a [coefficient, exponent] pair");
        SeriesTerm term;
        if (t[0].is_array()) {
            if (t[0].size() != 2)
                throw input_error(at + "/0: rational coefficient must be [numerator, denominator]");
            term.num = int_from_json(t[0][0], at + "/0/0");
            term.den = int_from_json(t[0][1], at + "/0/1");
        } else {
            term.num = int_from_json(t[0], at + "/0");
            term.den = 1;
        }
        if (!t[1].is_number_integer() || t[1].get<long long>() < 0)
            throw input_error(at + "/1: exponent must be a nonnegative integer");
        term.exp = t[1].get<long long>();
        s.push_back(std::move(term));
    }
    return s;
}

struct Context {
    std::unique_ptr<CProvider> provider;
    ValueSemigroup semigroup;

    Context(std::unique_ptr<CProvider> p, ValueSemigroup s)
        : provider(std::move(p)), semigroup(std::move(s)) {}
};

Context make_context(const CurveSpec& spec, const CliOptions& opts) {
    if (spec.mode == CurveSpec::Mode::explicit_semigroup) {
        ValueSemigroup s = ValueSemigroup::validate(spec.semigroup_r, spec.semigroup_conductor,
                                                    spec.semigroup_points);
        auto provider = std::make_unique<SemigroupProvider>(s);
        return Context{std::move(provider), std::move(s)};
    }
    BuiltModel built = build_certified(spec, opts.truncation);
    auto provider = std::make_unique<ModelProvider>(built);
    return Context{std::move(provider), std::move(built.semigroup)};
}

void add_text(json& rep, const std::string& line) { rep["_text"].push_back(line); }

json semigroup_to_json(const ValueSemigroup& s) {
    json sg;
    sg["r"] = s.r();
    sg["conductor"] = expo_to_json(s.delta());
    json pts = json::array();
    for (const auto& v : s.points()) pts.push_back(expo_to_json(v));
    sg["points"] = std::move(pts);
    return sg;
}

RunResult cmd_analyze(Context& ctx, json rep) {
    const CProvider& p = *ctx.provider;
    const ValueSemigroup& s = ctx.semigroup;
    rep["mode"] = "explicit-semigroup";  // makes the report re-ingestable
    rep["semigroup"] = semigroup_to_json(s);

    auto sym = s.symmetry_check();
    rep["gorenstein"] = sym.gorenstein;
    if (sym.witness) {
        rep["symmetry_witness"] = {{"v", expo_to_json(*sym.witness)},
                                   {"sum", sym.witness_sum}};
    }
    json maximals = json::array();
    for (const auto& v : s.points()) {
        auto prof = s.classify(v);
        if (!prof.is_maximal) continue;
        maximals.push_back({{"v", expo_to_json(v)},
                            {"absolute", prof.is_absolute},
                            {"relative", prof.is_relative}});
    }
    rep["maximals"] = std::move(maximals);
    if (s.r() >= 2) rep["xi"] = xi_to_json(s.xi_oracle());

    IntPoly pp = poly_P_prime(p);
    IntPoly pol = poly_P(p);
    rep["Pprime"] = poly_to_json(pp);
    rep["P"] = poly_to_json(pol);

    add_text(rep, "r = " + std::to_string(s.r()));
    add_text(rep, "conductor = " + to_string(s.delta()));
    add_text(rep, std::string("gorenstein = ") + (sym.gorenstein ? "yes" : "no"));
    add_text(rep, "P' = " + pp.str());
    add_text(rep, "P = " + pol.str());
    if (s.r() >= 2) {
        auto xi = s.xi_oracle();
        for (int i = 0; i < s.r(); ++i)
            for (int j = i + 1; j < s.r(); ++j)
                add_text(rep, "xi[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                  "] = " +
                                  std::to_string(xi.xi[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    }
    return RunResult{std::move(rep), 0};
}

RunResult cmd_series(Context& ctx, const CliOptions& opts, json rep) {
    const CProvider& p = *ctx.provider;
    int r = p.r();
    Expo delta = p.delta();
    long long dmax = *std::max_element(delta.begin(), delta.end());
    long long hi = opts.box.value_or(dmax + 2);
    std::string which = opts.which;
    if (which.empty()) throw input_error("series requires --which");

    rep["which"] = which;
    auto finish_int = [&](const IntPoly& poly) {
        rep["series"] = poly_to_json(poly);
        add_text(rep, which + " = " + poly.str());
        return RunResult{std::move(rep), 0};
    };
    auto finish_q = [&](const QPoly& poly) {
        rep["normalization"] = norm_name(opts.norm);
        rep["series"] = qpoly_to_json(poly);
        add_text(rep, which + " = " + poly.str());
        return RunResult{std::move(rep), 0};
    };

    if (which == "Pprime") return finish_int(poly_P_prime(p));
    if (which == "P") return finish_int(poly_P(p, -1, hi));
    if (which == "Ptilde") return finish_int(poly_P_tilde(p));
    if (which == "L")
        return finish_int(series_L(p, Box{expo_const(r, -1), expo_const(r, hi)}));
    if (which == "H") return finish_int(series_H(p, Box{expo_zero(r), expo_const(r, hi)}));
    if (which == "Lg")
        return finish_q(series_Lg(p, Box{expo_const(r, -1), expo_const(r, hi)}, opts.norm).poly);
    if (which == "Pg")
        return finish_q(
            series_Pg(series_Lg(p, Box{expo_const(r, -1), expo_const(r, hi)}, opts.norm)).poly);
    if (which == "hatPg")
        return finish_q(
            series_hatLg_hatPg(p, Box{expo_const(r, -1), expo_const(r, hi)}).second.poly);
    if (which == "Hg") return finish_q(series_Hg(p, Box{expo_zero(r), expo_const(r, hi)}).poly);
    if (which == "PgBar") {
        auto bar = compute_Pg_bar(p, opts.norm);
        rep["terminated"] = bar.terminated;
        return finish_q(bar.series.poly);
    }
    throw input_error("unknown series name: " + which);
}

RunResult cmd_project(Context& ctx, const CliOptions& opts, json rep) {
    if (opts.keep.empty()) throw input_error("project requires --keep");
    ValueSemigroup sub = ctx.semigroup.project(opts.keep);
    SemigroupProvider sp(sub);
    rep["keep"] = opts.keep;
    for (auto& k : rep["keep"]) k = k.get<int>() + 1;  // report 1-based
    rep["semigroup"] = semigroup_to_json(sub);
    rep["mode"] = "explicit-semigroup";
    IntPoly pp = poly_P_prime(sp);
    rep["Pprime"] = poly_to_json(pp);
    long long dmax = *std::max_element(sub.delta().begin(), sub.delta().end());
    IntPoly pol = poly_P(sp, -1, opts.box.value_or(dmax + 2));
    rep["P"] = poly_to_json(pol);
    add_text(rep, "conductor = " + to_string(sub.delta()));
    add_text(rep, "P' = " + pp.str());
    add_text(rep, "P = " + pol.str());
    return RunResult{std::move(rep), 0};
}

json check_to_json(const CheckResult& c) {
    json j;
    j["name"] = c.name;
    j["status"] = status_name(c.status);
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.witness) {
        j["witness"] = {{"v", expo_to_json(*c.witness)},
                        {"expected", c.expected},
                        {"actual", c.actual}};
    }
    return j;
}

RunResult cmd_verify(Context& ctx, const CliOptions& opts, json rep) {
    const CProvider& p = *ctx.provider;
    const ValueSemigroup& s = ctx.semigroup;
    std::vector<std::string> names = opts.checks;
    if (names.empty()) {
        names = classical_check_names();
        const auto& mot = motivic_check_names();
        names.insert(names.end(), mot.begin(), mot.end());
    }
    const auto& mot = motivic_check_names();
    json checks = json::array();
    bool any_fail = false;
    for (const auto& name : names) {
        std::vector<CheckResult> results;
        if (std::find(mot.begin(), mot.end(), name) != mot.end())
            results = check_motivic(p, s, name, opts.norm);
        else
            results = check_identity(p, s, name);
        for (const auto& c : results) {
            if (c.status == Status::Fail) any_fail = true;
            checks.push_back(check_to_json(c));
            std::string line = c.name + ": " + status_name(c.status);
            if (!c.detail.empty()) line += " (" + c.detail + ")";
            add_text(rep, line);
        }
    }
    rep["checks"] = std::move(checks);
    return RunResult{std::move(rep), any_fail ? 1 : 0};
}

RunResult cmd_recover_xi(Context& ctx, json rep) {
    const CProvider& p = *ctx.provider;
    const ValueSemigroup& s = ctx.semigroup;
    XiRecovery rec = recover_xi(p, s);
    XiMatrix oracle = s.r() >= 2 ? s.xi_oracle() : rec.xi;
    bool match = std::any_of(rec.all.begin(), rec.all.end(),
                             [&](const XiMatrix& m) { return m == oracle; });
    rep["recovered"] = xi_to_json(rec.xi);
    rep["oracle"] = xi_to_json(oracle);
    rep["ambiguous"] = rec.ambiguous;
    rep["match"] = match;
    add_text(rep, std::string("oracle match = ") + (match ? "yes" : "no"));
    for (int i = 0; i < s.r(); ++i)
        for (int j = i + 1; j < s.r(); ++j)
            add_text(rep, "xi[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " +
                              std::to_string(rec.xi.xi[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return RunResult{std::move(rep), match ? 0 : 1};
}

}  // namespace

CurveSpec parse_spec_json(const json& j) {
    if (!j.is_object()) throw input_error("/: expected a JSON object");
    if (!j.contains("mode") || !j["mode"].is_string())
        throw input_error("/mode: required string, one of parametrization, explicit-semigroup");
    std::string mode = j["mode"].get<std::string>();

    CurveSpec spec;
    if (j.contains("field")) {
        const auto& f = j["field"];
        if (!f.is_object() || !f.contains("type") || !f["type"].is_string())
            throw input_error("/field: expected {\"type\": \"rational\"|\"prime\"}");
        std::string type = f["type"].get<std::string>();
        if (type == "rational") {
            spec.field.rational = true;
        } else if (type == "prime") {
            spec.field.rational = false;
            if (!f.contains("p") || !f["p"].is_number_integer() || f["p"].get<long long>() < 2)
                throw input_error("/field/p: prime >= 2 required");
            spec.field.p = f["p"].get<long long>();
        } else {
            throw input_error("/field/type: unknown field type " + type);
        }
    }

    if (mode == "explicit-semigroup") {
        spec.mode = CurveSpec::Mode::explicit_semigroup;
        if (!j.contains("semigroup") || !j["semigroup"].is_object())
            throw input_error("/semigroup: required object");
        const auto& sg = j["semigroup"];
        if (!sg.contains("r") || !sg["r"].is_number_integer() || sg["r"].get<int>() < 1)
            throw input_error("/semigroup/r: positive integer required");
        spec.semigroup_r = sg["r"].get<int>();
        if (!sg.contains("conductor"))
            throw input_error("/semigroup/conductor: required");
        spec.semigroup_conductor = expo_from_json(sg["conductor"], "/semigroup/conductor");
        if (!sg.contains("points") || !sg["points"].is_array())
            throw input_error("/semigroup/points: required array");
        for (size_t k = 0; k < sg["points"].size(); ++k)
            spec.semigroup_points.push_back(
                expo_from_json(sg["points"][k], "/semigroup/points/" + std::to_string(k)));
        return spec;
    }

    if (mode != "parametrization")
        throw input_error("/mode: unknown mode " + mode);
    spec.mode = CurveSpec::Mode::parametrization;
    if (!j.contains("branches") || !j["branches"].is_array() || j["branches"].empty())
        throw input_error("/branches: non-empty array required");
    const auto& branches = j["branches"];
    int r = static_cast<int>(branches.size());

    // generator names: sorted union of the per-branch keys
    std::vector<std::string> names;
    for (const auto& b : branches) {
        if (!b.is_object()) throw input_error("/branches: each branch must be an object");
        for (const auto& [key, val] : b.items())
            if (std::find(names.begin(), names.end(), key) == names.end()) names.push_back(key);
    }
    std::sort(names.begin(), names.end());
    if (names.empty()) throw input_error("/branches: no generators given");

    spec.generator_names = names;
    for (const auto& name : names) {
        std::vector<BranchSeries> comps;
        for (int b = 0; b < r; ++b) {
            const auto& br = branches[static_cast<size_t>(b)];
            std::string where = "/branches/" + std::to_string(b) + "/" + name;
            if (br.contains(name)) comps.push_back(branch_series_from_json(br[name], where));
            else comps.push_back(BranchSeries{});
        }
        spec.generators.push_back(std::move(comps));
    }

    if (!spec.field.rational && spec.field.p <= r)
        throw input_error("/field/p: p <= r is not allowed (p = " + std::to_string(spec.field.p) +
                          ", r = " + std::to_string(r) + ")");
    return spec;
}

CurveSpec parse_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
    return parse_spec_json(j);
}

RunResult run_command(const std::string& cmd, const CurveSpec& spec, const CliOptions& opts,
                      const std::string& raw_input) {
    if (const char* cap = std::getenv("SEMICURVE_MAX_BOX")) {
        long long v = std::atoll(cap);
        if (v > 0) ValueSemigroup::max_box_points = v;
    }
    Context ctx = make_context(spec, opts);
    json rep;
    rep["command"] = cmd;
    rep["input_digest"] = fnv1a_digest(raw_input);
    rep["provider"] = ctx.provider->kind();
    rep["_text"] = json::array();
    add_text(rep, "command: " + cmd);
    add_text(rep, "input digest: " + rep["input_digest"].get<std::string>());

    if (cmd == "analyze") return cmd_analyze(ctx, std::move(rep));
    if (cmd == "series") return cmd_series(ctx, opts, std::move(rep));
    if (cmd == "project") return cmd_project(ctx, opts, std::move(rep));
    if (cmd == "verify") return cmd_verify(ctx, opts, std::move(rep));
    if (cmd == "recover-xi") return cmd_recover_xi(ctx, std::move(rep));
    throw input_error("unknown command: " + cmd);
}

std::string emit_report(const json& report, const std::string& format) {
    if (format == "json") {
        json j = report;
        j.erase("_text");
        return j.dump(2) + "\n";
    }
    if (format == "text") {
        std::string out;
        if (report.contains("_text"))
            for (const auto& line : report["_text"]) out += line.get<std::string>() + "\n";
        return out;
    }
    throw input_error("unknown format: " + format);
}

}  // namespace semicurve
