#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "parhox/io.hpp"

#ifndef PARHOX_FIXTURES_DIR
#define PARHOX_FIXTURES_DIR "fixtures"
#endif

int main(int argc, char** argv) {
    CLI::App app{"parhox: twisted partial actions, partial group algebras and their homology"};
    app.require_subcommand(1);
    app.set_version_flag("--version", parhox::kToolVersion);

    std::string spec_path, field, json_out, fixtures = PARHOX_FIXTURES_DIR;
    std::optional<std::size_t> max_n, max_p, max_q, cap;
    std::optional<std::uint64_t> seed;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"validate", "check the schema, group and factor set"},
        {"validate-action", "check the partial action and its twist"},
        {"build-kpar", "build the (twisted) partial group algebra"},
        {"build-crossed", "build the partial crossed product"},
        {"hochschild", "Hochschild (co)homology of the crossed product, two routes"},
        {"partial-homology", "partial group (co)homology"},
        {"spectral", "second page of the spectral sequences against Hochschild dims"},
        {"selfcheck", "run the acceptance suite on the bundled fixtures"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name == "selfcheck") sub->add_option("--fixtures", fixtures, "fixture directory");
        else sub->add_option("spec", spec_path, "problem spec (JSON)")->required();
        sub->add_option("--field", field, "override the field: Q, F<p>, GF(p)");
        sub->add_option("--max-n", max_n, "top Hochschild / partial degree");
        sub->add_option("--max-p", max_p, "top p on the second page");
        sub->add_option("--max-q", max_q, "top q on the second page");
        sub->add_option("--cap", cap, "largest chain-space dimension");
        sub->add_option("--json-out", json_out, "also write the report here");
        sub->add_option("--seed", seed, "seed for sampled checks");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        nlohmann::ordered_json report;
        report["tool"] = "parhox";
        report["version"] = parhox::kToolVersion;
        report["error"] = {{"kind", "UsageError"}, {"message", e.what()}};
        report["ok"] = false;
        report["exit_code"] = 2;
        std::cout << report.dump(2) << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    parhox::CommandFlags flags;
    flags.max_n = max_n;
    flags.max_p = max_p;
    flags.max_q = max_q;
    flags.cap = cap;
    flags.seed = seed;
    flags.fixtures_dir = fixtures;
    if (const char* env = std::getenv("PARHOX_CAP")) flags.cap_env = env;
    if (!field.empty()) flags.field = field;
    parhox::CommandResult res = parhox::run_command(command, spec_path, flags);
    const std::string text = res.report.dump(2);
    std::cout << text << "\n";
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "cannot write " << json_out << "\n";
            return 2;
        }
        out << text << "\n";
    }
    return res.exit_code;
}
