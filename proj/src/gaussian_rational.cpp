#include "recip/gaussian_rational.hpp"

#include "recip/error.hpp"

namespace recip {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw MathError("division by zero in Q(i)");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    GaussianRational result(1);
    GaussianRational base = *this;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    Rational mag = abs(im_);
    if (mag != 1) imag = mag.get_str();
    imag += 'i';
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

}  // namespace recip
