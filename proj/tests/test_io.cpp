#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

#include "parhox/io.hpp"

using namespace parhox;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(PARHOX_FIXTURES_DIR) + "/" + name + ".json"; }

std::string write_temp(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / ("parhox_test_" + name + ".json");
    std::ofstream(p) << text;
    return p.string();
}

std::vector<std::string> schema_issues(const json& doc) {
    try {
        parse_spec(doc);
    } catch (const SchemaFailure& e) {
        return e.issues();
    }
    return {};
}

bool mentions(const std::vector<std::string>& issues, const std::string& needle) {
    for (const auto& i : issues)
        if (i.find(needle) != std::string::npos) return true;
    return false;
}

std::string without_timing(nlohmann::ordered_json report) {
    report.erase("timing");
    return report.dump();
}

}  // namespace

TEST_CASE("SHA-256 known answer") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("field names") {
    CHECK(parse_field("Q").is_rational());
    CHECK(parse_field("GF(7)").characteristic() == 7);
    CHECK(parse_field("f11").characteristic() == 11);
    try {
        parse_field("F4");
        FAIL("F4 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SchemaError);
        CHECK(std::string(e.what()).find("not prime") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_field("R"), Error);
}

TEST_CASE("schema errors carry paths and are all reported") {
    auto issues = schema_issues(json::parse(R"({"field": "F4", "group": "Z2", "extra": 1})"));
    CHECK(mentions(issues, "/field"));
    CHECK(mentions(issues, "/extra"));
    issues = schema_issues(json::parse(R"({"field": "Q", "group": "Z2", "sigma": [[1, 1], [1]]})"));
    CHECK(mentions(issues, "/sigma/1"));
    issues = schema_issues(json::parse(R"({"field": "Q", "group": "Z2", "sigma": [[1, 1], [1, "x/y"]]})"));
    CHECK(mentions(issues, "/sigma/1/1"));
    issues = schema_issues(json::parse(R"({"field": "Q", "group": {"cayley": [[0, 1], [1, 1]]}})"));
    CHECK(mentions(issues, "/group"));
    issues = schema_issues(json::parse(R"({"field": "Q", "group": "Z2", "options": {"max_z": 1}})"));
    CHECK(mentions(issues, "/options/max_z"));
}

TEST_CASE("partial action schema") {
    // theta_t is not multiplicative on its domain.
    auto issues = schema_issues(json::parse(R"({
        "field": "Q", "group": "Z2",
        "partial_action": {"algebra": {"preset": "diagonal", "dim": 2},
                           "one_g": [[1, 1], [1, 1]],
                           "theta": [[[1, 0], [0, 1]], [[1, 1], [0, 1]]]}})"));
    CHECK(mentions(issues, "/partial_action"));
    issues = schema_issues(json::parse(R"({
        "field": "Q", "group": "Z2",
        "partial_action": {"algebra": {"dim": 2, "unit": [1, 0], "products": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 2, 1]]},
                           "one_g": [[1, 0], [1, 0]], "theta": [[[1, 0], [0, 1]], [[1, 0], [0, 1]]]}})"));
    CHECK(mentions(issues, "/partial_action/algebra/products/3"));
}

TEST_CASE("digest ignores key order and formatting") {
    ProblemSpec a = parse_spec(json::parse(R"({"field": "Q", "group": "Z3"})"));
    ProblemSpec b = parse_spec(json::parse(R"({ "group" : "Z3",   "field":"Q" })"));
    CHECK(a.digest == b.digest);
    ProblemSpec c = parse_spec(json::parse(R"({"field": "F5", "group": "Z3"})"));
    CHECK(a.digest != c.digest);
    // A field override is part of the canonical input.
    ProblemSpec d = parse_spec(json::parse(R"({"field": "Q", "group": "Z3"})"), FieldSpec::prime(5));
    CHECK(d.digest == c.digest);
}

TEST_CASE("bundled fixtures parse") {
    for (const auto& e : std::filesystem::directory_iterator(PARHOX_FIXTURES_DIR))
        if (e.path().extension() == ".json") {
            INFO(e.path().string());
            CHECK_NOTHROW(parse_spec_file(e.path().string()));
        }
}

TEST_CASE("build-kpar on Z2 gives dimension three") {
    CommandResult r = run_command("build-kpar", fixture("z2_trivial"), {});
    CHECK(r.exit_code == 0);
    CHECK(r.report["results"]["dim"] == 3);
    CHECK(r.report["ok"] == true);
}

TEST_CASE("spectral on the partial Z3 action is collapse-consistent") {
    CommandFlags flags;
    flags.max_p = 2;
    flags.max_q = 2;
    CommandResult r = run_command("spectral", fixture("z3_ksq"), flags);
    CHECK(r.exit_code == 0);
    CHECK(r.report["results"]["status"] == "collapse-consistent");
}

TEST_CASE("reports have a stable key order and are reproducible") {
    CommandResult a = run_command("hochschild", fixture("z2_dual_sign"), {});
    CommandResult b = run_command("hochschild", fixture("z2_dual_sign"), {});
    CHECK(without_timing(a.report) == without_timing(b.report));
    std::vector<std::string> keys;
    for (auto it = a.report.begin(); it != a.report.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"tool", "version", "command", "input_digest", "results", "verdicts", "ok",
                                           "exit_code", "timing"});
    CHECK(a.report["results"]["homology"] == json::array({2, 1, 1}));
}

TEST_CASE("errors become reports with exit code two") {
    CommandResult missing = run_command("validate", "/nonexistent/spec.json", {});
    CHECK(missing.exit_code == 2);
    CHECK(missing.report["error"]["kind"] == "IOError");

    CommandFlags f4;
    f4.field = "F4";
    CommandResult bad_field = run_command("validate", fixture("z2_trivial"), f4);
    CHECK(bad_field.exit_code == 2);
    CHECK(bad_field.report["error"]["kind"] == "SchemaError");

    CommandResult no_action = run_command("hochschild", fixture("z2_trivial"), {});
    CHECK(no_action.exit_code == 2);
    CHECK(no_action.report["error"]["kind"] == "PreconditionFailed");

    CommandFlags env;
    env.cap_env = "lots";
    CHECK(run_command("validate", fixture("z2_trivial"), env).exit_code == 2);

    CHECK(run_command("frobnicate", fixture("z2_trivial"), {}).exit_code == 2);
}

TEST_CASE("the size cap reaches the computation") {
    CommandFlags tiny;
    tiny.cap = 10;
    CommandResult r = run_command("hochschild", fixture("z3_cyclic_k3"), tiny);
    CHECK(r.exit_code == 2);
    CHECK(r.report["error"]["kind"] == "SizeLimit");
    CommandFlags env;
    env.cap_env = "10";
    CHECK(run_command("hochschild", fixture("z3_cyclic_k3"), env).report["error"]["kind"] == "SizeLimit");
}

TEST_CASE("custom coefficient modules are used") {
    CommandResult r = run_command("hochschild", fixture("z2_sign_module"), {});
    CHECK(r.exit_code == 0);
    CHECK(r.report["results"]["module_dim"] == 1);
    // M = k with t acting by -1 on one side: [t, m] = -2m kills degree zero.
    CHECK(r.report["results"]["homology"][0] == 0);
}

TEST_CASE("twists needing normalization are normalized and noted") {
    const std::string path = write_temp("renorm", R"({
        "field": "Q", "group": "Z3",
        "partial_action": {"algebra": {"preset": "field"}, "one_g": [[1], [1], [1]],
                           "theta": [[[1]], [[1]], [[1]]],
                           "sigma": [[1, 1, 1], [1, 3, "1/3"], [1, "1/3", 3]]}})");
    CommandResult r = run_command("spectral", path, {});
    CHECK(r.report.contains("notes"));
    CHECK(r.report["results"].contains("normalized_sigma"));
    std::remove(path.c_str());
}

TEST_CASE("failing verdicts give exit code one") {
    // sigma(1, t) = 2 breaks the unit condition.
    const std::string path = write_temp("badsigma", R"({"field": "Q", "group": "Z2", "sigma": [[1, 2], [1, 1]]})");
    CommandResult r = run_command("validate", path, {});
    CHECK(r.exit_code == 1);
    CHECK(r.report["ok"] == false);
    std::remove(path.c_str());
}
