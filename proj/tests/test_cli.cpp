#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "semicurve/cli.hpp"

using json = nlohmann::json;
using namespace semicurve;

namespace {

struct CmdResult {
    std::string out;
    int exit_code = -1;
};

// Runs the installed CLI binary and captures stdout plus the exit status.
CmdResult run(const std::string& args) {
    std::string cmd = std::string(SEMICURVE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string data(const std::string& name) {
    return std::string(SEMICURVE_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("series command emits the expected terms") {
    CmdResult res = run("series " + data("cusp.json") + " --which Pprime");
    REQUIRE(res.exit_code == 0);
    json rep = json::parse(res.out);
    json want = json::array({json::array({-1, {0}}), json::array({1, {1}}), json::array({-1, {2}})});
    CHECK(rep["series"]["terms"] == want);
    CHECK(rep["which"] == "Pprime");
    CHECK(rep["input_digest"].is_string());
}

TEST_CASE("verify exit status reflects the check outcomes") {
    for (const char* name : {"cusp", "node", "tacnode", "triple", "m4613", "m345"}) {
        CAPTURE(name);
        CmdResult res = run("verify " + data(std::string(name) + ".json"));
        CHECK(res.exit_code == 0);
        json rep = json::parse(res.out);
        for (const auto& chk : rep["checks"]) CHECK(chk["status"] != "FAIL");
    }
}

TEST_CASE("output is byte-deterministic") {
    CmdResult a = run("analyze " + data("tacnode.json"));
    CmdResult b = run("analyze " + data("tacnode.json"));
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CmdResult c = run("verify " + data("triple.json") + " --format text");
    CmdResult d = run("verify " + data("triple.json") + " --format text");
    CHECK(c.out == d.out);
}

TEST_CASE("analyze text output reports the Poincare polynomial") {
    CmdResult res = run("analyze " + data("node.json") + " --format text");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("P = 1\n") != std::string::npos);
    CHECK(res.out.find("gorenstein = yes") != std::string::npos);
}

TEST_CASE("analyze output round-trips as an explicit-semigroup spec") {
    CmdResult first = run("analyze " + data("tacnode.json"));
    REQUIRE(first.exit_code == 0);
    json rep = json::parse(first.out);
    REQUIRE(rep["mode"] == "explicit-semigroup");

    // feed the report back in as a spec, through the library entry points
    CurveSpec spec = parse_spec_json(rep);
    RunResult again = run_command("analyze", spec, CliOptions{}, rep.dump());
    CHECK(again.exit_code == 0);
    CHECK(again.report["Pprime"] == rep["Pprime"]);
    CHECK(again.report["P"] == rep["P"]);
    CHECK(again.report["semigroup"] == rep["semigroup"]);
}

TEST_CASE("recover-xi agrees with the oracle and reports success") {
    CmdResult res = run("recover-xi " + data("tacnode.json"));
    REQUIRE(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep["match"] == true);
    CHECK(rep["ambiguous"] == false);
    CHECK(rep["recovered"] == rep["oracle"]);
    CHECK(rep["recovered"][0][1] == 2);
}

TEST_CASE("project keeps the requested branches") {
    CmdResult res = run("project " + data("triple.json") + " --keep 1,2");
    REQUIRE(res.exit_code == 0);
    json rep = json::parse(res.out);
    CHECK(rep["semigroup"]["conductor"] == json::array({1, 1}));
    CHECK(rep["keep"] == json::array({1, 2}));
}

TEST_CASE("invalid inputs exit with status 2") {
    CHECK(run("verify " + data("malformed.json")).exit_code == 2);
    CmdResult res = run("verify " + data("bad_field.json"));
    CHECK(res.exit_code == 2);
    json rep = json::parse(res.out);
    std::string msg = rep["error"].get<std::string>();
    CHECK(msg.find("/field/p") != std::string::npos);
    CHECK(run("verify " + data("no_such_file.json")).exit_code == 2);
}

TEST_CASE("spec validation details") {
    CHECK_THROWS_AS(parse_spec_json(json{{"mode", "sideways"}}), input_error);
    json prime_small = json::parse(std::ifstream(data("bad_field.json")),
                                   nullptr, true);
    CHECK_THROWS_AS(parse_spec_json(prime_small), input_error);
    json ok = json::parse(std::ifstream(data("cusp.json")), nullptr, true);
    CurveSpec spec = parse_spec_json(ok);
    CHECK(spec.branch_count() == 1);
    CHECK(spec.generator_names == std::vector<std::string>{"x", "y"});
}
