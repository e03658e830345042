#include "recip/circle.hpp"

#include <cmath>

#include "recip/error.hpp"

namespace recip {

OrientedCircle::OrientedCircle(GaussianRational center, Rational radius, Orientation orientation)
    : center_(std::move(center)), radius_(std::move(radius)), orientation_(orientation) {
    radius_.canonicalize();
    if (sgn(radius_) <= 0) throw DomainError("circle radius must be positive, got " + radius_.get_str());
}

OrientedCircle OrientedCircle::reversed() const {
    return with_orientation(orientation_ == Orientation::CCW ? Orientation::CW : Orientation::CCW);
}

Side OrientedCircle::locate(const GaussianRational& a) const {
    int c = cmp((a - center_).norm(), radius_ * radius_);
    return c < 0 ? Side::Inside : c == 0 ? Side::On : Side::Outside;
}

std::complex<double> OrientedCircle::point(double theta) const {
    double s = orientation_ == Orientation::CCW ? theta : -theta;
    return center_.to_complex() + radius_.get_d() * std::polar(1.0, s);
}

std::string OrientedCircle::str() const {
    return "circle(center " + center_.str() + ", radius " + radius_.get_str() + ", " +
           (orientation_ == Orientation::CCW ? "ccw" : "cw") + ")";
}

}  // namespace recip
