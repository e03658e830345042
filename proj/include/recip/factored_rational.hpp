#pragma once

#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "recip/gaussian_rational.hpp"

namespace recip {

/// A point of the Riemann sphere with a finite part in Q(i).
class Point {
public:
    Point(GaussianRational z) : value_(std::move(z)) {}  // NOLINT(google-explicit-constructor)
    Point(long z) : value_(GaussianRational(z)) {}       // NOLINT(google-explicit-constructor)
    static Point infinity() { return Point(); }

    bool is_infinity() const noexcept { return !value_.has_value(); }
    /// Precondition: finite.
    const GaussianRational& value() const { return *value_; }

    friend bool operator==(const Point&, const Point&) = default;
    /// Finite points in lexicographic order, infinity last.
    friend std::strong_ordering operator<=>(const Point& a, const Point& b);

    std::string str() const { return is_infinity() ? "inf" : value_->str(); }
    friend std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

private:
    Point() = default;
    std::optional<GaussianRational> value_;
};

/// Formal sum of points with nonzero integer multiplicities.
class Divisor {
public:
    using Map = std::map<Point, long>;

    Divisor() = default;
    /// Zero multiplicities are dropped.
    explicit Divisor(const Map& entries);

    const Map& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    long multiplicity(const Point& p) const;
    long degree() const;

    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    Map entries_;
};

/// c * prod (z - a_k)^{m_k} over Q(i), kept in normal form: c != 0, distinct
/// roots, nonzero multiplicities.
class FactoredRational {
public:
    using FactorMap = std::map<GaussianRational, long>;

    /// The constant 1.
    FactoredRational() = default;
    /// Throws MathError when `unit` is zero.
    explicit FactoredRational(GaussianRational unit, const FactorMap& factors = {});

    static FactoredRational constant(GaussianRational c) { return FactoredRational(std::move(c)); }
    /// (z - root)^multiplicity.
    static FactoredRational linear(GaussianRational root, long multiplicity = 1);
    static FactoredRational z() { return linear(GaussianRational(0)); }

    const GaussianRational& unit() const noexcept { return unit_; }
    const FactorMap& factors() const noexcept { return factors_; }
    bool is_constant() const noexcept { return factors_.empty(); }

    /// Sum of all multiplicities, i.e. -valuation at infinity.
    long degree() const;

    FactoredRational& operator*=(const FactoredRational& o);
    FactoredRational& operator/=(const FactoredRational& o);
    friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
    friend FactoredRational operator/(FactoredRational a, const FactoredRational& b) { return a /= b; }
    FactoredRational inverse() const;
    FactoredRational pow(long exponent) const;

    /// Floating-point value at a finite point (may be 0 or inf near the divisor).
    std::complex<double> evaluate(std::complex<double> z) const;

    friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

    /// Prints in the expression grammar, e.g. "2 * (z - 1)^2 * (z - i)^-1".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const FactoredRational& f) { return os << f.str(); }

private:
    void merge(const FactorMap& other, long sign);

    GaussianRational unit_{1};
    FactorMap factors_;
};

/// Exact value at p. Throws MathError when f has a zero or pole at p.
GaussianRational eval(const FactoredRational& f, const GaussianRational& p);

/// Order of vanishing at p (negative for poles); at infinity, -degree.
long valuation(const FactoredRational& f, const Point& p);

Divisor divisor(const FactoredRational& f);

/// f(1/w) as a factored function of w.
FactoredRational substitute_infinity(const FactoredRational& f);

}  // namespace recip
