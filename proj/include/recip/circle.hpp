#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "recip/gaussian_rational.hpp"

namespace recip {

enum class Orientation { CCW, CW };

enum class Side { Inside, On, Outside };

/// Circle with exact center and radius. The CCW parametrization is
/// center + radius * e^{i theta}; CW traverses the same path with theta decreasing.
class OrientedCircle {
public:
    /// Throws DomainError unless radius > 0.
    OrientedCircle(GaussianRational center, Rational radius, Orientation orientation = Orientation::CCW);

    const GaussianRational& center() const noexcept { return center_; }
    const Rational& radius() const noexcept { return radius_; }
    Orientation orientation() const noexcept { return orientation_; }

    OrientedCircle reversed() const;
    OrientedCircle with_orientation(Orientation o) const { return {center_, radius_, o}; }

    /// Exact position of a relative to the circle: |a - c|^2 against r^2.
    Side locate(const GaussianRational& a) const;
    bool encloses(const GaussianRational& a) const { return locate(a) == Side::Inside; }

    /// Point at parameter theta, measured in the positive direction of the orientation.
    std::complex<double> point(double theta) const;

    friend bool operator==(const OrientedCircle&, const OrientedCircle&) = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const OrientedCircle& c) { return os << c.str(); }

private:
    GaussianRational center_;
    Rational radius_;
    Orientation orientation_;
};

}  // namespace recip
