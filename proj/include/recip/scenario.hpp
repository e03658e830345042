#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "recip/bordered.hpp"
#include "recip/error.hpp"
#include "recip/parser.hpp"

namespace recip {

/// Invalid scenario input. `field` names the JSON location ("functions.f",
/// "checks[2].g", "line 4") the message refers to.
class ScenarioError : public Error {
public:
    ScenarioError(const std::string& field, const std::string& what) : Error(field + ": " + what), field_(field) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct CheckSpec {
    /// residue_sum, weil, tame, deligne, sweep, property
    std::string type;
    std::string f;
    std::string g;
    /// tame: evaluation point, "inf" for infinity
    std::optional<Point> point;
    /// tame: expected exact value
    std::optional<GaussianRational> expect;
    /// property: which law (weil, residue, tame_circle, deligne) and how many cases
    std::string law;
    long count = 0;
};

struct NumericSettings {
    std::size_t samples = kDefaultSamples;
    double tol = kDefaultTolerance;
    std::uint64_t seed = 0;
};

struct Scenario {
    std::vector<std::string> function_order;
    std::map<std::string, ParametricRational> functions;
    std::map<std::string, std::string> function_text;
    /// Outer and hole circles, possibly affine in t.
    std::optional<FamilySpec> domain;
    bool has_family = false;
    std::vector<CheckSpec> checks;
    NumericSettings numeric;

    /// Precondition: `name` is defined and independent of t.
    FactoredRational function(const std::string& name) const;
    /// Precondition: domain present and independent of t.
    BorderedDomain fixed_domain() const;
};

/// Parses and validates. Throws ScenarioError for malformed input, unknown
/// names, invalid geometry, and inadmissible deligne functions.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& path);

struct RunOptions {
    std::optional<std::size_t> samples;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
};

struct CheckOutcome {
    std::string label;
    bool pass = false;
    /// One-line human summary.
    std::string summary;
    nlohmann::ordered_json detail;
};

struct RunResult {
    std::vector<CheckOutcome> checks;
    /// 0 when every check passes, 1 otherwise.
    int exit_code = 0;
    nlohmann::ordered_json report;
    /// Per-circle rows for deligne and sweep checks, with header.
    std::string csv;
};

/// Executes every check in declaration order.
RunResult run(const Scenario& scenario, const RunOptions& options = {});

struct ConvergenceRow {
    std::size_t samples = 0;
    std::string check;
    std::optional<double> defect;
    std::string error;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    /// Per check, successful defects are nonincreasing along the grid once
    /// differences below 1e-14 are treated as rounding noise.
    bool monotone = true;

    std::string csv() const;
};

/// Defect of each deligne and tame check at every sample count. Throws
/// ScenarioError if the scenario has neither.
ConvergenceTable convergence_study(const Scenario& scenario, const std::vector<std::size_t>& grid);

/// Radius 2^-k, largest with every other zero or pole of f and g at distance
/// at least twice the radius from p.
Rational isolating_radius(const FactoredRational& f, const FactoredRational& g, const GaussianRational& p);

}  // namespace recip
