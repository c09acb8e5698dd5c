// zpm: exact constants, zero-table checks and zero-sum experiments.

#include "zpm/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    namespace rep = zpm::report;

    CLI::App app{"Discrete moment toolkit: exact constants and zero-sum experiments"};
    app.require_subcommand(1);

    rep::VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify-exact", "Recompute every exact constant");
    verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
    std::string fault;
    verify_cmd->add_option("--inject-fault", fault, "Negate one computed value (test hook)")
        ->group("");

    std::string config;
    auto* exp_cmd = app.add_subcommand("experiments", "Run the zero-data experiments");
    exp_cmd->add_option("--config", config, "Key = value run configuration")->required();

    auto* zeros_cmd = app.add_subcommand("zeros", "Zero-table utilities");
    zeros_cmd->require_subcommand(1);
    std::string validate_path;
    auto* validate_cmd = zeros_cmd->add_subcommand("validate", "Parse and check a zero table");
    validate_cmd->add_option("path", validate_path, "Zero table")->required();
    std::string url;
    std::size_t expect_lines = 0;
    std::string dest = "zeros.txt";
    auto* fetch_cmd = zeros_cmd->add_subcommand("fetch", "Download and validate a zero table");
    fetch_cmd->add_option("--url", url, "Source URL")->required();
    fetch_cmd->add_option("--expect-lines", expect_lines, "Expected line count")->required();
    fetch_cmd->add_option("--output", dest, "Destination file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : rep::kExitUsage;
    }

    if (*verify_cmd) {
        if (!fault.empty()) {
            verify.fault = fault;
        }
        return rep::cmd_verify_exact(verify, std::cout, std::cerr);
    }
    if (*exp_cmd) {
        return rep::cmd_run_experiments(config, std::cout, std::cerr);
    }
    if (*validate_cmd) {
        return rep::cmd_zeros_validate(validate_path, std::cout, std::cerr);
    }
    return rep::cmd_zeros_fetch(url, expect_lines, dest, std::cout, std::cerr);
}
