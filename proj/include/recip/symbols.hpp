#pragma once

#include "recip/factored_rational.hpp"
#include "recip/gaussian_rational.hpp"

namespace recip {

/// Tame symbol (f, g)_p = (-1)^{v(f) v(g)} [f^{v(g)} / g^{v(f)}](p), with v the
/// valuation at p. The point at infinity goes through the chart z = 1/w.
GaussianRational tame_symbol(const FactoredRational& f, const FactoredRational& g, const Point& p);

/// Product of tame symbols over the joint support of both divisors together
/// with infinity. Equals 1 for every pair of rational functions.
GaussianRational weil_product(const FactoredRational& f, const FactoredRational& g);

/// Residue of the differential f dz at p. At infinity this is the residue at
/// w = 0 of -f(1/w) w^-2 dw.
GaussianRational residue(const FactoredRational& f, const Point& p);

/// Sum of the residues of f dz over every pole, infinity included. Always 0.
GaussianRational residue_sum_check(const FactoredRational& f);

}  // namespace recip
