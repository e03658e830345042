#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recip/factored_rational.hpp"
#include "recip/gaussian_rational.hpp"

namespace recip {

/// constant + slope * t, with the parameter t ranging over Q.
struct AffineScalar {
    GaussianRational constant;
    GaussianRational slope;

    bool depends_on_t() const { return !slope.is_zero(); }
    GaussianRational at(const Rational& t) const { return constant + slope * GaussianRational(t); }

    friend bool operator==(const AffineScalar&, const AffineScalar&) = default;
};

/// A factored rational whose scalars and roots may be affine in t. Instantiating
/// at a value of t yields an ordinary normal-form FactoredRational.
class ParametricRational {
public:
    struct Term {
        AffineScalar value;
        long exponent;
    };

    ParametricRational() = default;
    ParametricRational(std::vector<Term> scalars, std::vector<Term> roots)
        : scalars_(std::move(scalars)), roots_(std::move(roots)) {}

    const std::vector<Term>& scalars() const noexcept { return scalars_; }
    const std::vector<Term>& roots() const noexcept { return roots_; }
    bool depends_on_t() const;

    /// Throws MathError if a scalar factor vanishes at t.
    FactoredRational at(const Rational& t) const;

private:
    std::vector<Term> scalars_;
    std::vector<Term> roots_;
};

/// Parses the factored expression grammar, e.g. "2 * (z-1)^2 / (z-i)".
/// Throws ParseError with the byte offset of the offending token.
FactoredRational parse_rational(std::string_view text);

/// As parse_rational, but scalar literals may carry a `b*t` term.
ParametricRational parse_parametric(std::string_view text);

/// A single Gaussian-rational literal such as "-3/2", "i", "1 - 2/3 i".
GaussianRational parse_scalar(std::string_view text);

/// A literal of the form "a + b*t" (either part optional).
AffineScalar parse_affine(std::string_view text);

/// Inverse of parse_rational up to normal form.
inline std::string print(const FactoredRational& f) { return f.str(); }

}  // namespace recip
