#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semicurve/cli.hpp"

using namespace semicurve;

int main(int argc, char** argv) {
    CLI::App app{"Value semigroups and Poincare series of curve singularities"};
    app.require_subcommand(1);

    std::string spec_path;
    CliOptions opts;
    long long box = -1, truncation = -1;
    std::string norm = "chi-g";
    std::string keep_str, checks_str;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path, "curve description file (JSON)")->required();
        sub->add_option("--box", box, "lattice box bound for truncated series");
        sub->add_option("--keep", keep_str, "comma-separated 1-based branch indices");
        sub->add_option("--which", opts.which, "series or check name");
        sub->add_option("--normalization", norm, "chi-g or paper-literal")
            ->check(CLI::IsMember({"chi-g", "paper-literal"}));
        sub->add_option("--format", opts.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--truncation", truncation, "ring model truncation order");
        sub->add_option("--checks", checks_str, "comma-separated check names");
        return sub;
    };

    const char* cmds[] = {"analyze", "series", "project", "verify", "recover-xi"};
    for (const char* c : cmds) add_common(app.add_subcommand(c));

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();

    try {
        if (box >= 0) opts.box = box;
        if (truncation >= 0) opts.truncation = truncation;
        opts.norm = parse_norm(norm);
        {
            std::stringstream ss(keep_str);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) opts.keep.push_back(std::stoi(tok) - 1);
        }
        {
            std::stringstream ss(checks_str);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) opts.checks.push_back(tok);
        }

        std::ifstream in(spec_path);
        if (!in) throw input_error("cannot open " + spec_path);
        std::stringstream raw;
        raw << in.rdbuf();

        CurveSpec spec = parse_spec_json(nlohmann::json::parse(raw.str()));
        RunResult res = run_command(cmd, spec, opts, raw.str());
        std::cout << emit_report(res.report, opts.format);
        return res.exit_code;
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["error"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    }
}
