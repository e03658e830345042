// recip: verify reciprocity scenarios from the command line.
//
//   recip verify <scenario.json> [--samples N] [--tol T] [--seed S] [--report out.json] [--csv out.csv]
//   recip convergence <scenario.json> --grid 256,1024,4096 [--csv out.csv]
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input or validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recip/scenario.hpp"

namespace {

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << content;
    return static_cast<bool>(out);
}

int verify(const std::string& path, const recip::RunOptions& options, const std::string& report_path,
           const std::string& csv_path) {
    recip::Scenario scenario = recip::load_scenario(path);
    recip::RunResult result = recip::run(scenario, options);
    for (const auto& c : result.checks) {
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.label << "  " << c.summary << "\n";
    }
    std::size_t passed = 0;
    for (const auto& c : result.checks) passed += c.pass ? 1 : 0;
    std::cout << passed << "/" << result.checks.size() << " checks passed\n";
    if (!report_path.empty() && !write_file(report_path, result.report.dump(2) + "\n")) return 2;
    if (!csv_path.empty() && !write_file(csv_path, result.csv)) return 2;
    return result.exit_code;
}

int convergence(const std::string& path, const std::vector<std::size_t>& grid, const std::string& csv_path) {
    recip::Scenario scenario = recip::load_scenario(path);
    recip::ConvergenceTable table = recip::convergence_study(scenario, grid);
    std::string csv = table.csv();
    std::cout << csv;
    std::cout << "monotone refinement: " << (table.monotone ? "yes" : "no") << "\n";
    if (!csv_path.empty() && !write_file(csv_path, csv)) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tame symbols, residues and numeric reciprocity checks"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::optional<std::size_t> samples;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::string report_path;
    std::string csv_path;
    std::vector<std::size_t> grid;

    auto* verify_cmd = app.add_subcommand("verify", "run every check in a scenario");
    verify_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
    verify_cmd->add_option("--samples", samples, "samples per circle (power of two >= 16)");
    verify_cmd->add_option("--tol", tol, "numeric tolerance");
    verify_cmd->add_option("--seed", seed, "seed for property checks");
    verify_cmd->add_option("--report", report_path, "write a JSON report");
    verify_cmd->add_option("--csv", csv_path, "write per-circle T values as CSV");

    auto* conv_cmd = app.add_subcommand("convergence", "defect against sample count");
    conv_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
    conv_cmd->add_option("--grid", grid, "comma-separated sample counts")->delimiter(',')->required();
    conv_cmd->add_option("--csv", csv_path, "write the table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) return verify(scenario_path, {samples, tol, seed}, report_path, csv_path);
        return convergence(scenario_path, grid, csv_path);
    } catch (const recip::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
