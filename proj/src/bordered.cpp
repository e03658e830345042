#include "recip/bordered.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "recip/error.hpp"

namespace recip {

namespace {

// Closed disk of `inner` strictly inside the open disk of `outer`:
// |c_i - c_o| + r_i < r_o, compared after squaring.
bool strictly_inside(const OrientedCircle& inner, const OrientedCircle& outer) {
    Rational gap = outer.radius() - inner.radius();
    if (sgn(gap) <= 0) return false;
    return (inner.center() - outer.center()).norm() < gap * gap;
}

// Closed disks disjoint: |c1 - c2| > r1 + r2.
bool disjoint(const OrientedCircle& a, const OrientedCircle& b) {
    Rational sum = a.radius() + b.radius();
    return (a.center() - b.center()).norm() > sum * sum;
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

BorderedDomain::BorderedDomain(OrientedCircle outer, std::vector<OrientedCircle> holes)
    : outer_(outer.with_orientation(Orientation::CCW)) {
    holes_.reserve(holes.size());
    for (auto& h : holes) holes_.push_back(h.with_orientation(Orientation::CCW));
    for (std::size_t i = 0; i < holes_.size(); ++i) {
        if (!strictly_inside(holes_[i], outer_)) {
            throw DomainError("hole not inside outer: hole " + std::to_string(i) + " " + holes_[i].str() + " vs " +
                              outer_.str());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!disjoint(holes_[i], holes_[j])) {
                throw DomainError("holes overlap: hole " + std::to_string(j) + " " + holes_[j].str() + " and hole " +
                                  std::to_string(i) + " " + holes_[i].str());
            }
        }
    }
}

std::vector<OrientedCircle> induced_boundary(const BorderedDomain& domain) {
    std::vector<OrientedCircle> out{domain.outer()};
    for (const auto& h : domain.holes()) out.push_back(h.with_orientation(Orientation::CW));
    return out;
}

std::string Admissibility::message() const {
    switch (status) {
        case Status::Admissible:
            return "admissible";
        case Status::Interior:
            return "inadmissible: divisor point " + point->str() + " inside domain body";
        case Status::OnContour:
            return "on-contour: divisor point " + point->str() + " lies on a boundary circle";
    }
    return {};
}

Admissibility check_admissible(const FactoredRational& f, const BorderedDomain& domain) {
    for (const auto& [a, m] : f.factors()) {
        Side outer = domain.outer().locate(a);
        if (outer == Side::On) return {Admissibility::Status::OnContour, a};
        if (outer == Side::Outside) continue;
        bool in_hole = false;
        for (const auto& h : domain.holes()) {
            Side s = h.locate(a);
            if (s == Side::On) return {Admissibility::Status::OnContour, a};
            if (s == Side::Inside) in_hole = true;
        }
        if (!in_hole) return {Admissibility::Status::Interior, a};
    }
    return {};
}

namespace {

void require_admissible(const FactoredRational& f, const BorderedDomain& domain) {
    Admissibility a = check_admissible(f, domain);
    if (a.status == Admissibility::Status::OnContour) throw OnContourError(a.message());
    if (a.status == Admissibility::Status::Interior) throw InadmissibleError(a.message());
}

}  // namespace

std::vector<GaussianRational> tame_circle_oracle(const FactoredRational& f, const FactoredRational& g,
                                                 const BorderedDomain& domain) {
    require_admissible(f, domain);
    require_admissible(g, domain);
    std::vector<GaussianRational> out;
    for (const auto& c : induced_boundary(domain)) out.push_back(t_pairing_oracle(f, g, c));
    return out;
}

ReciprocityReport deligne_check(const FactoredRational& f, const FactoredRational& g, const BorderedDomain& domain,
                                std::size_t n, double tol) {
    std::vector<GaussianRational> oracle = tame_circle_oracle(f, g, domain);
    std::vector<OrientedCircle> boundary = induced_boundary(domain);

    ReciprocityReport report;
    report.tolerance = tol;
    report.samples = n;
    report.product = Complex(1.0, 0.0);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        SampledLoop fl = restrict(f, boundary[i], n);
        SampledLoop gl = restrict(g, boundary[i], n);
        Complex value = t_pairing(fl, gl);
        double od = std::abs(value - oracle[i].to_complex());
        report.circles.push_back({boundary[i], value, oracle[i], od});
        report.product *= value;
        report.max_oracle_defect = std::max(report.max_oracle_defect, od);
    }
    report.defect = std::abs(report.product - Complex(1.0, 0.0));
    report.pass = report.defect <= tol;
    return report;
}

OrientedCircle AffineCircle::at(const Rational& t) const {
    GaussianRational r = radius.at(t);
    if (!r.is_real()) throw DomainError("circle radius must be real, got " + r.str());
    return OrientedCircle(center.at(t), r.re());
}

BorderedDomain FamilySpec::domain_at(const Rational& t) const {
    std::vector<OrientedCircle> hs;
    for (const auto& h : holes) hs.push_back(h.at(t));
    return BorderedDomain(outer.at(t), std::move(hs));
}

bool SweepResult::pass() const {
    return std::all_of(fibers.begin(), fibers.end(), [](const FiberReport& r) { return r.pass(); });
}

SweepResult family_sweep(const FamilySpec& spec, const ParametricRational& f, const ParametricRational& g,
                         std::size_t n, double tol) {
    SweepResult result;
    for (const Rational& t : spec.t_grid) {
        FiberReport fiber;
        fiber.t = t;
        try {
            fiber.report = deligne_check(f.at(t), g.at(t), spec.domain_at(t), n, tol);
        } catch (const Error& e) {
            fiber.error = e.what();
        }
        result.fibers.push_back(std::move(fiber));
    }
    return result;
}

void write_report_csv_header(std::ostream& os) { os << "t,circle,re,im,oracle_re,oracle_im,defect\n"; }

void write_report_csv_rows(std::ostream& os, const std::string& t, const ReciprocityReport& report) {
    for (std::size_t i = 0; i < report.circles.size(); ++i) {
        const CircleResult& c = report.circles[i];
        Complex o = c.oracle.to_complex();
        os << t << ',' << i << ',' << fmt_double(c.value.real()) << ',' << fmt_double(c.value.imag()) << ','
           << fmt_double(o.real()) << ',' << fmt_double(o.imag()) << ',' << fmt_double(c.oracle_defect) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    write_report_csv_header(os);
    for (const auto& fiber : sweep.fibers) {
        if (fiber.report) write_report_csv_rows(os, fiber.t.get_str(), *fiber.report);
    }
}

}  // namespace recip
