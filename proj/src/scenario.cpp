#include "recip/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "recip/random_fixtures.hpp"
#include "recip/symbols.hpp"

namespace recip {

using nlohmann::ordered_json;

namespace {

const std::set<std::string> kCheckTypes{"residue_sum", "weil", "tame", "deligne", "sweep", "property"};
const std::set<std::string> kLaws{"weil", "residue", "tame_circle", "deligne"};

// Defects below this are rounding noise and do not count against monotone refinement.
constexpr double kRoundoffFloor = 1e-14;

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

const ordered_json& require(const ordered_json& obj, const std::string& key, const std::string& field) {
    if (!obj.is_object() || !obj.contains(key)) throw ScenarioError(field, "missing field \"" + key + "\"");
    return obj.at(key);
}

std::string require_string(const ordered_json& obj, const std::string& key, const std::string& field) {
    const ordered_json& v = require(obj, key, field);
    if (!v.is_string()) throw ScenarioError(field + "." + key, "expected a string");
    return v.get<std::string>();
}

AffineScalar affine_field(const ordered_json& obj, const std::string& key, const std::string& field, bool allow_t) {
    std::string text = require_string(obj, key, field);
    try {
        AffineScalar s = parse_affine(text);
        if (s.depends_on_t() && !allow_t) throw ScenarioError(field + "." + key, "parameter t requires a family");
        return s;
    } catch (const ParseError& e) {
        throw ScenarioError(field + "." + key, e.what());
    }
}

AffineCircle circle_field(const ordered_json& obj, const std::string& field, bool allow_t) {
    AffineCircle c{affine_field(obj, "center", field, allow_t), affine_field(obj, "radius", field, allow_t)};
    if (!c.radius.constant.is_real() || !c.radius.slope.is_real()) {
        throw ScenarioError(field + ".radius", "radius must be real");
    }
    return c;
}

Rational rational_literal(const std::string& text, const std::string& field) {
    try {
        GaussianRational v = parse_scalar(text);
        if (!v.is_real()) throw ScenarioError(field, "expected a real rational");
        return v.re();
    } catch (const ParseError& e) {
        throw ScenarioError(field, e.what());
    }
}

double tolerance_value(const ordered_json& v, const std::string& field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            std::size_t used = 0;
            std::string s = v.get<std::string>();
            double d = std::stod(s, &used);
            if (used == s.size() && d > 0) return d;
        } catch (const std::exception&) {
        }
    }
    throw ScenarioError(field, "expected a positive tolerance");
}

// Line number of a byte offset for JSON syntax errors.
std::size_t line_of(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') ++line;
    }
    return line;
}

std::string check_label(const CheckSpec& c, std::size_t index) {
    std::string label = "#" + std::to_string(index) + " " + c.type;
    if (c.type == "property") return label + " " + c.law + " x" + std::to_string(c.count);
    if (!c.f.empty()) label += " " + c.f;
    if (!c.g.empty()) label += "," + c.g;
    if (c.point) label += " @" + c.point->str();
    return label;
}

ordered_json report_json(const ReciprocityReport& r) {
    ordered_json circles = ordered_json::array();
    for (const auto& c : r.circles) {
        Complex o = c.oracle.to_complex();
        circles.push_back({{"circle", c.circle.str()},
                           {"value", {c.value.real(), c.value.imag()}},
                           {"oracle", c.oracle.str()},
                           {"oracle_float", {o.real(), o.imag()}},
                           {"oracle_defect", c.oracle_defect}});
    }
    return {{"circles", circles},
            {"product", {r.product.real(), r.product.imag()}},
            {"defect", r.defect},
            {"max_oracle_defect", r.max_oracle_defect},
            {"samples", r.samples},
            {"tolerance", r.tolerance},
            {"pass", r.pass}};
}

bool report_ok(const ReciprocityReport& r) { return r.pass && r.max_oracle_defect <= r.tolerance; }

struct TameNumeric {
    Complex value;
    double defect;
};

TameNumeric tame_numeric(const FactoredRational& f, const FactoredRational& g, const GaussianRational& p,
                         const GaussianRational& exact, std::size_t n) {
    OrientedCircle circle(p, isolating_radius(f, g, p));
    Complex v = t_pairing(restrict(f, circle, n), restrict(g, circle, n));
    return {v, std::abs(v - exact.to_complex())};
}

CheckOutcome run_property(const CheckSpec& c, const NumericSettings& numeric) {
    FixtureGenerator gen(numeric.seed);
    CheckOutcome out;
    long failures = 0;
    double worst = 0.0;
    std::string first_failure;
    for (long k = 0; k < c.count; ++k) {
        try {
            if (c.law == "weil") {
                FactoredRational f = gen.pool_rational();
                FactoredRational g = gen.pool_rational();
                if (weil_product(f, g) != GaussianRational(1)) {
                    ++failures;
                    if (first_failure.empty()) first_failure = "weil(" + f.str() + ", " + g.str() + ")";
                }
            } else if (c.law == "residue") {
                FactoredRational f = gen.pool_rational();
                if (!residue_sum_check(f).is_zero()) {
                    ++failures;
                    if (first_failure.empty()) first_failure = "residues(" + f.str() + ")";
                }
            } else if (c.law == "tame_circle") {
                auto sc = gen.small_circle_case();
                GaussianRational exact = tame_symbol(sc.f, sc.g, Point(sc.point));
                Complex v = t_pairing(restrict(sc.f, sc.circle, numeric.samples),
                                      restrict(sc.g, sc.circle, numeric.samples));
                double d = std::abs(v - exact.to_complex());
                worst = std::max(worst, d);
                if (!(d <= numeric.tol)) {
                    ++failures;
                    if (first_failure.empty()) first_failure = "T(" + sc.f.str() + ", " + sc.g.str() + ")";
                }
            } else {
                auto dc = gen.domain_case();
                ReciprocityReport r = deligne_check(dc.f, dc.g, dc.domain, numeric.samples, numeric.tol);
                worst = std::max({worst, r.defect, r.max_oracle_defect});
                if (!report_ok(r)) {
                    ++failures;
                    if (first_failure.empty()) first_failure = "deligne(" + dc.f.str() + ", " + dc.g.str() + ")";
                }
            }
        } catch (const Error& e) {
            ++failures;
            if (first_failure.empty()) first_failure = e.what();
        }
    }
    out.pass = failures == 0;
    out.summary = std::to_string(c.count - failures) + "/" + std::to_string(c.count) + " cases hold";
    if (c.law == "tame_circle" || c.law == "deligne") out.summary += ", worst defect " + fmt_double(worst);
    if (!first_failure.empty()) out.summary += ", first failure " + first_failure;
    out.detail = {{"law", c.law}, {"count", c.count}, {"failures", failures}, {"seed", numeric.seed}};
    if (c.law == "tame_circle" || c.law == "deligne") out.detail["worst_defect"] = worst;
    return out;
}

}  // namespace

FactoredRational Scenario::function(const std::string& name) const { return functions.at(name).at(Rational(0)); }

BorderedDomain Scenario::fixed_domain() const { return domain->domain_at(Rational(0)); }

Rational isolating_radius(const FactoredRational& f, const FactoredRational& g, const GaussianRational& p) {
    std::optional<Rational> nearest;
    for (const auto* h : {&f, &g}) {
        for (const auto& [a, m] : h->factors()) {
            if (a == p) continue;
            Rational d2 = (a - p).norm();
            if (!nearest || d2 < *nearest) nearest = d2;
        }
    }
    Rational r(1);
    if (!nearest) return r;
    while (r * r * 4 > *nearest) r /= 2;
    return r;
}

Scenario parse_scenario(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioError("line " + std::to_string(line_of(json_text, e.byte == 0 ? 0 : e.byte - 1)), e.what());
    }
    if (!doc.is_object()) throw ScenarioError("scenario", "top level must be an object");

    Scenario sc;

    if (doc.contains("family")) {
        const ordered_json& fam = doc.at("family");
        const ordered_json& grid = require(fam, "t_grid", "family");
        if (!grid.is_array() || grid.empty()) throw ScenarioError("family.t_grid", "expected a non-empty array");
        if (fam.contains("substitute") && !fam.at("substitute").get<bool>()) {
            throw ScenarioError("family.substitute", "only substitute = true is supported");
        }
        sc.has_family = true;
        sc.domain.emplace();
        for (std::size_t k = 0; k < grid.size(); ++k) {
            std::string field = "family.t_grid[" + std::to_string(k) + "]";
            if (!grid[k].is_string()) throw ScenarioError(field, "expected an exact rational string");
            sc.domain->t_grid.push_back(rational_literal(grid[k].get<std::string>(), field));
        }
    }

    const ordered_json& fns = require(doc, "functions", "scenario");
    if (!fns.is_object()) throw ScenarioError("functions", "expected an object");
    for (const auto& [name, value] : fns.items()) {
        std::string field = "functions." + name;
        if (!value.is_string()) throw ScenarioError(field, "expected an expression string");
        try {
            ParametricRational pr = parse_parametric(value.get<std::string>());
            if (pr.depends_on_t() && !sc.has_family) throw ScenarioError(field, "parameter t requires a family");
            if (!pr.depends_on_t()) pr.at(Rational(0));
            sc.functions.emplace(name, std::move(pr));
            sc.function_text.emplace(name, value.get<std::string>());
            sc.function_order.push_back(name);
        } catch (const ParseError& e) {
            throw ScenarioError(field, e.what());
        } catch (const MathError& e) {
            throw ScenarioError(field, e.what());
        }
    }

    if (doc.contains("domain")) {
        const ordered_json& dom = doc.at("domain");
        std::vector<Rational> grid = sc.domain ? sc.domain->t_grid : std::vector<Rational>{};
        FamilySpec spec;
        spec.t_grid = std::move(grid);
        spec.outer = circle_field(require(dom, "outer", "domain"), "domain.outer", sc.has_family);
        if (dom.contains("holes")) {
            const ordered_json& holes = dom.at("holes");
            if (!holes.is_array()) throw ScenarioError("domain.holes", "expected an array");
            for (std::size_t k = 0; k < holes.size(); ++k) {
                spec.holes.push_back(circle_field(holes[k], "domain.holes[" + std::to_string(k) + "]", sc.has_family));
            }
        }
        sc.domain = std::move(spec);
        bool parametric = sc.domain->outer.center.depends_on_t() || sc.domain->outer.radius.depends_on_t();
        for (const auto& h : sc.domain->holes) parametric = parametric || h.center.depends_on_t() || h.radius.depends_on_t();
        if (!parametric) {
            try {
                sc.fixed_domain();
            } catch (const Error& e) {
                throw ScenarioError("domain", e.what());
            }
        }
    } else if (sc.has_family) {
        sc.domain.reset();
    }

    if (doc.contains("numeric")) {
        const ordered_json& num = doc.at("numeric");
        if (num.contains("samples")) {
            const ordered_json& s = num.at("samples");
            if (!s.is_number_unsigned()) throw ScenarioError("numeric.samples", "expected a positive integer");
            sc.numeric.samples = s.get<std::size_t>();
        }
        if (num.contains("tol")) sc.numeric.tol = tolerance_value(num.at("tol"), "numeric.tol");
        if (num.contains("seed")) {
            const ordered_json& s = num.at("seed");
            if (!s.is_number_unsigned()) throw ScenarioError("numeric.seed", "expected a non-negative integer");
            sc.numeric.seed = s.get<std::uint64_t>();
        }
    }

    const ordered_json& checks = require(doc, "checks", "scenario");
    if (!checks.is_array()) throw ScenarioError("checks", "expected an array");
    for (std::size_t k = 0; k < checks.size(); ++k) {
        const std::string field = "checks[" + std::to_string(k) + "]";
        const ordered_json& c = checks[k];
        CheckSpec spec;
        spec.type = require_string(c, "type", field);
        if (!kCheckTypes.count(spec.type)) throw ScenarioError(field + ".type", "unknown check type " + spec.type);

        auto function_ref = [&](const std::string& key) {
            std::string name = require_string(c, key, field);
            auto it = sc.functions.find(name);
            if (it == sc.functions.end()) throw ScenarioError(field + "." + key, "unknown function " + name);
            if (spec.type != "sweep" && it->second.depends_on_t()) {
                throw ScenarioError(field + "." + key, "function " + name + " depends on t; only sweep checks accept it");
            }
            return name;
        };

        if (spec.type == "property") {
            spec.law = require_string(c, "law", field);
            if (!kLaws.count(spec.law)) throw ScenarioError(field + ".law", "unknown law " + spec.law);
            const ordered_json& count = require(c, "count", field);
            if (!count.is_number_unsigned()) throw ScenarioError(field + ".count", "expected a positive integer");
            spec.count = count.get<long>();
            sc.checks.push_back(std::move(spec));
            continue;
        }

        spec.f = function_ref("f");
        if (spec.type != "residue_sum") spec.g = function_ref("g");

        if (spec.type == "tame") {
            std::string pt = require_string(c, "point", field);
            if (pt == "inf" || pt == "infinity") {
                spec.point = Point::infinity();
            } else {
                try {
                    spec.point = Point(parse_scalar(pt));
                } catch (const ParseError& e) {
                    throw ScenarioError(field + ".point", e.what());
                }
            }
            if (c.contains("expect")) {
                try {
                    spec.expect = parse_scalar(require_string(c, "expect", field));
                } catch (const ParseError& e) {
                    throw ScenarioError(field + ".expect", e.what());
                }
            }
        }

        if (spec.type == "deligne" || spec.type == "sweep") {
            if (!sc.domain) throw ScenarioError(field, spec.type + " check requires a domain");
        }
        if (spec.type == "sweep" && !sc.has_family) throw ScenarioError(field, "sweep check requires a family");
        if (spec.type == "deligne") {
            BorderedDomain domain = [&] {
                try {
                    return sc.fixed_domain();
                } catch (const Error& e) {
                    throw ScenarioError(field, std::string("deligne check needs a fixed domain: ") + e.what());
                }
            }();
            for (const std::string& name : {spec.f, spec.g}) {
                Admissibility a = check_admissible(sc.function(name), domain);
                if (!a) throw ScenarioError(field, a.message() + " (function " + name + ")");
            }
        }
        sc.checks.push_back(std::move(spec));
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError(path.string(), "cannot open scenario file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

RunResult run(const Scenario& scenario, const RunOptions& options) {
    NumericSettings numeric = scenario.numeric;
    if (options.samples) numeric.samples = *options.samples;
    if (options.tol) numeric.tol = *options.tol;
    if (options.seed) numeric.seed = *options.seed;

    RunResult result;
    std::ostringstream csv;
    write_report_csv_header(csv);
    ordered_json checks = ordered_json::array();

    for (std::size_t k = 0; k < scenario.checks.size(); ++k) {
        const CheckSpec& c = scenario.checks[k];
        CheckOutcome out;
        out.label = check_label(c, k);
        try {
            if (c.type == "residue_sum") {
                GaussianRational sum = residue_sum_check(scenario.function(c.f));
                out.pass = sum.is_zero();
                out.summary = "residue sum = " + sum.str();
                out.detail = {{"sum", sum.str()}};
            } else if (c.type == "weil") {
                GaussianRational product = weil_product(scenario.function(c.f), scenario.function(c.g));
                out.pass = product == GaussianRational(1);
                out.summary = "weil product = " + product.str();
                out.detail = {{"product", product.str()}};
            } else if (c.type == "tame") {
                FactoredRational f = scenario.function(c.f);
                FactoredRational g = scenario.function(c.g);
                GaussianRational value = tame_symbol(f, g, *c.point);
                out.pass = !c.expect || *c.expect == value;
                out.summary = "tame symbol = " + value.str();
                out.detail = {{"value", value.str()}};
                if (c.expect) out.detail["expect"] = c.expect->str();
                if (!c.point->is_infinity()) {
                    TameNumeric tn = tame_numeric(f, g, c.point->value(), value, numeric.samples);
                    out.pass = out.pass && tn.defect <= numeric.tol;
                    out.summary += ", small-circle T defect " + fmt_double(tn.defect);
                    out.detail["numeric"] = {tn.value.real(), tn.value.imag()};
                    out.detail["numeric_defect"] = tn.defect;
                }
            } else if (c.type == "deligne") {
                ReciprocityReport r = deligne_check(scenario.function(c.f), scenario.function(c.g),
                                                    scenario.fixed_domain(), numeric.samples, numeric.tol);
                out.pass = report_ok(r);
                out.summary = "product defect " + fmt_double(r.defect) + ", oracle defect " +
                              fmt_double(r.max_oracle_defect);
                out.detail = report_json(r);
                write_report_csv_rows(csv, "", r);
            } else if (c.type == "sweep") {
                SweepResult sweep = family_sweep(*scenario.domain, scenario.functions.at(c.f),
                                                 scenario.functions.at(c.g), numeric.samples, numeric.tol);
                ordered_json fibers = ordered_json::array();
                std::size_t passed = 0;
                double worst = 0.0;
                out.pass = true;
                for (const auto& fiber : sweep.fibers) {
                    ordered_json fj = {{"t", fiber.t.get_str()}};
                    bool ok = fiber.report && report_ok(*fiber.report);
                    if (fiber.report) {
                        fj["report"] = report_json(*fiber.report);
                        worst = std::max({worst, fiber.report->defect, fiber.report->max_oracle_defect});
                        write_report_csv_rows(csv, fiber.t.get_str(), *fiber.report);
                    } else {
                        fj["error"] = fiber.error;
                    }
                    fj["pass"] = ok;
                    passed += ok ? 1 : 0;
                    out.pass = out.pass && ok;
                    fibers.push_back(std::move(fj));
                }
                out.summary = std::to_string(passed) + "/" + std::to_string(sweep.fibers.size()) +
                              " fibers pass, worst defect " + fmt_double(worst);
                for (const auto& fiber : sweep.fibers) {
                    if (!fiber.error.empty()) out.summary += "; t=" + fiber.t.get_str() + ": " + fiber.error;
                }
                out.detail = {{"fibers", fibers}};
            } else {
                out = [&] {
                    CheckOutcome p = run_property(c, numeric);
                    p.label = out.label;
                    return p;
                }();
            }
        } catch (const Error& e) {
            out.pass = false;
            out.summary = std::string("error: ") + e.what();
            out.detail = {{"error", e.what()}};
        }
        ordered_json cj = {{"label", out.label}, {"type", c.type}, {"pass", out.pass}, {"summary", out.summary}};
        cj["detail"] = out.detail;
        checks.push_back(std::move(cj));
        if (!out.pass) result.exit_code = 1;
        result.checks.push_back(std::move(out));
    }

    result.report = {{"settings", {{"samples", numeric.samples}, {"tol", numeric.tol}, {"seed", numeric.seed}}},
                     {"checks", checks},
                     {"pass", result.exit_code == 0}};
    result.csv = csv.str();
    return result;
}

std::string ConvergenceTable::csv() const {
    std::ostringstream os;
    os << "samples,check,defect,status\n";
    for (const auto& r : rows) {
        os << r.samples << ',' << r.check << ',';
        if (r.defect) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", *r.defect);
            os << buf << ",ok\n";
        } else {
            os << ",\"" << r.error << "\"\n";
        }
    }
    return os.str();
}

ConvergenceTable convergence_study(const Scenario& scenario, const std::vector<std::size_t>& grid) {
    std::vector<std::size_t> targets;
    for (std::size_t k = 0; k < scenario.checks.size(); ++k) {
        const CheckSpec& c = scenario.checks[k];
        if (c.type == "deligne" || (c.type == "tame" && !c.point->is_infinity())) targets.push_back(k);
    }
    if (targets.empty()) throw ScenarioError("checks", "convergence study needs a deligne or finite-point tame check");

    ConvergenceTable table;
    for (std::size_t k : targets) {
        const CheckSpec& c = scenario.checks[k];
        std::string label = check_label(c, k);
        std::optional<double> previous;
        for (std::size_t n : grid) {
            ConvergenceRow row;
            row.samples = n;
            row.check = label;
            try {
                FactoredRational f = scenario.function(c.f);
                FactoredRational g = scenario.function(c.g);
                if (c.type == "deligne") {
                    row.defect = deligne_check(f, g, scenario.fixed_domain(), n, scenario.numeric.tol).defect;
                } else {
                    GaussianRational exact = tame_symbol(f, g, *c.point);
                    row.defect = tame_numeric(f, g, c.point->value(), exact, n).defect;
                }
            } catch (const Error& e) {
                row.error = e.what();
            }
            if (row.defect) {
                if (previous && *row.defect > std::max(*previous, kRoundoffFloor)) table.monotone = false;
                previous = row.defect;
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

}  // namespace recip
