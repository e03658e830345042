#pragma once

#include <complex>
#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace recip {

using Rational = mpq_class;

/// Exact element re + im*i of Q(i). Both parts are kept in lowest terms, so
/// structural equality is numeric equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(Rational re, Rational im);

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |x|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// Throws MathError for zero.
    GaussianRational inverse() const;
    /// Integer power; negative exponents invert. 0^0 = 1, 0^negative throws.
    GaussianRational pow(long exponent) const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic on (re, im); only used to key ordered containers.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    /// Prints in the literal syntax accepted by the parser: "3/2", "-i", "1-2/3i".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace recip
