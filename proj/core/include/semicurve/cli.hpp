#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semicurve/curve_model.hpp"
#include "semicurve/motivic.hpp"

namespace semicurve {

struct CliOptions {
    std::optional<long long> box;
    std::vector<int> keep;  // zero-based branch indices
    std::string which;
    MotivicNorm norm = MotivicNorm::chi_g;
    std::string format = "json";
    std::optional<long long> truncation;
    std::vector<std::string> checks;
};

// Parses and validates a curve description file (JSON). Errors carry a
// JSON-pointer-style location.
CurveSpec parse_spec(const std::string& path);
CurveSpec parse_spec_json(const nlohmann::json& j);

struct RunResult {
    nlohmann::json report;
    int exit_code = 0;
};

// cmd is one of analyze, series, project, verify, recover-xi. raw_input is
// the original file content, digested into the report.
RunResult run_command(const std::string& cmd, const CurveSpec& spec, const CliOptions& opts,
                      const std::string& raw_input);

// Deterministic rendering; format is "json" or "text".
std::string emit_report(const nlohmann::json& report, const std::string& format);

}  // namespace semicurve
