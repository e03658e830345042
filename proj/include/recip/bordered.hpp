#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "recip/circle.hpp"
#include "recip/factored_rational.hpp"
#include "recip/loop.hpp"
#include "recip/parser.hpp"

namespace recip {

/// Closed disk minus open holes. All circles are stored CCW; the holes carry
/// the CW orientation on the boundary.
class BorderedDomain {
public:
    /// Throws DomainError when a hole's closed disk is not strictly inside the
    /// outer open disk, or two holes' closed disks meet.
    explicit BorderedDomain(OrientedCircle outer, std::vector<OrientedCircle> holes = {});

    const OrientedCircle& outer() const noexcept { return outer_; }
    const std::vector<OrientedCircle>& holes() const noexcept { return holes_; }

private:
    OrientedCircle outer_;
    std::vector<OrientedCircle> holes_;
};

/// Outer circle CCW, then every hole CW.
std::vector<OrientedCircle> induced_boundary(const BorderedDomain& domain);

struct Admissibility {
    enum class Status { Admissible, Interior, OnContour };

    Status status = Status::Admissible;
    /// The first offending zero or pole.
    std::optional<GaussianRational> point;

    explicit operator bool() const noexcept { return status == Status::Admissible; }
    std::string message() const;
};

/// Every zero and pole of f lies strictly inside a hole or strictly outside the outer circle.
Admissibility check_admissible(const FactoredRational& f, const BorderedDomain& domain);
inline bool admissible(const FactoredRational& f, const BorderedDomain& domain) {
    return static_cast<bool>(check_admissible(f, domain));
}

struct CircleResult {
    OrientedCircle circle;
    Complex value;
    GaussianRational oracle;
    /// |value - oracle|
    double oracle_defect = 0.0;
};

struct ReciprocityReport {
    std::vector<CircleResult> circles;
    Complex product;
    /// |product - 1|
    double defect = 0.0;
    double max_oracle_defect = 0.0;
    double tolerance = kDefaultTolerance;
    std::size_t samples = kDefaultSamples;
    bool pass = false;
};

/// Evaluates T on each induced boundary circle and their product. Throws
/// InadmissibleError or OnContourError when f or g fails admissibility.
ReciprocityReport deligne_check(const FactoredRational& f, const FactoredRational& g, const BorderedDomain& domain,
                                std::size_t n = kDefaultSamples, double tol = kDefaultTolerance);

/// Exact T values on each induced boundary circle; their product is exactly 1.
std::vector<GaussianRational> tame_circle_oracle(const FactoredRational& f, const FactoredRational& g,
                                                 const BorderedDomain& domain);

/// Circle whose center and radius are affine in t.
struct AffineCircle {
    AffineScalar center;
    AffineScalar radius;

    OrientedCircle at(const Rational& t) const;
};

struct FamilySpec {
    std::vector<Rational> t_grid;
    AffineCircle outer;
    std::vector<AffineCircle> holes;

    BorderedDomain domain_at(const Rational& t) const;
};

struct FiberReport {
    Rational t;
    std::optional<ReciprocityReport> report;
    /// Set when the fiber could not be checked (inadmissible, on-contour, sampling).
    std::string error;

    bool pass() const { return report && report->pass; }
};

struct SweepResult {
    std::vector<FiberReport> fibers;

    bool pass() const;
};

/// One deligne_check per grid value, in grid order. A failing fiber is
/// recorded and the sweep moves on.
SweepResult family_sweep(const FamilySpec& spec, const ParametricRational& f, const ParametricRational& g,
                         std::size_t n = kDefaultSamples, double tol = kDefaultTolerance);

/// Header line for the per-circle CSV export.
void write_report_csv_header(std::ostream& os);
/// Rows t,circle,re,im,oracle_re,oracle_im,defect; `t` may be empty.
void write_report_csv_rows(std::ostream& os, const std::string& t, const ReciprocityReport& report);
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

}  // namespace recip
