#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "recip/parser.hpp"
#include "recip/random_fixtures.hpp"
#include "recip/symbols.hpp"

using recip::FactoredRational;
using recip::GaussianRational;
using recip::Point;
using recip::Rational;
using recip::parse_rational;
using recip::residue;
using recip::tame_symbol;

namespace {

GaussianRational gq(long a, long b, long c = 0, long d = 1) {
    Rational re(a, b);
    Rational im(c, d);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

// (1/2 pi i) times the contour integral of f dz over |z - center| = radius,
// by the trapezoidal rule. Independent of the series arithmetic in residue().
std::complex<double> contour_integral(const FactoredRational& f, std::complex<double> center, double radius,
                                      int n = 2048) {
    std::complex<double> sum(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        std::complex<double> e = radius * std::polar(1.0, 2.0 * std::numbers::pi * k / n);
        sum += f.evaluate(center + e) * e;
    }
    return sum / static_cast<double>(n);
}

double nearest_other(const FactoredRational& f, const GaussianRational& p) {
    double best = 1e9;
    for (const auto& [a, m] : f.factors()) {
        if (a != p) best = std::min(best, std::abs(a.to_complex() - p.to_complex()));
    }
    return best;
}

}  // namespace

TEST_CASE("tame symbol examples") {
    FactoredRational z = FactoredRational::z();
    CHECK(tame_symbol(z, z, Point(0)) == GaussianRational(-1));
    CHECK(tame_symbol(z, FactoredRational::constant(gq(2, 3, 1, 1)), Point(0)) == gq(2, 3, 1, 1).inverse());
    // (z, 1 - z) at infinity: in w = 1/z the bracket is -(1 - z)/z = (z - 1)/z -> 1
    CHECK(tame_symbol(z, parse_rational("-1*(z-1)"), Point::infinity()) == GaussianRational(1));
    // (z, z) at infinity: v = -1 on both, (-1)^1 * 1
    CHECK(tame_symbol(z, z, Point::infinity()) == GaussianRational(-1));
    // away from both divisors the symbol is 1
    CHECK(tame_symbol(z, parse_rational("(z-2)"), Point(5)) == GaussianRational(1));
}

TEST_CASE("tame symbol at a common zero") {
    // f = z^2 (z-1), g = 3 z^-1 (z+1): v_0(f) = 2, v_0(g) = -1
    // (-1)^{-2} [f^{-1} / g^{2}](0) = [z^-2 (z-1)^-1 z^2 / (9 (z+1)^2)](0) = -1/9
    FactoredRational f = parse_rational("(z-0)^2 * (z-1)");
    FactoredRational g = parse_rational("3 * z^-1 * (z+1)");
    CHECK(tame_symbol(f, g, Point(0)) == gq(-1, 9));
}

TEST_CASE("weil product examples") {
    FactoredRational z = FactoredRational::z();
    CHECK(recip::weil_product(z, z) == GaussianRational(1));
    CHECK(recip::weil_product(z, parse_rational("-1*(z-1)")) == GaussianRational(1));
    CHECK(recip::weil_product(FactoredRational::constant(3), FactoredRational::constant(gq(1, 2, 1, 1))) ==
          GaussianRational(1));
}

TEST_CASE("residue examples") {
    FactoredRational inv_z = parse_rational("z^-1");
    CHECK(residue(inv_z, Point(0)) == GaussianRational(1));
    CHECK(residue(inv_z, Point::infinity()) == GaussianRational(-1));
    // 1/(z(z-1)) = -1/z + 1/(z-1)
    FactoredRational h = parse_rational("1 / z / (z-1)");
    CHECK(residue(h, Point(0)) == GaussianRational(-1));
    CHECK(residue(h, Point(1)) == GaussianRational(1));
    CHECK(residue(h, Point::infinity()) == GaussianRational(0));
    CHECK(residue(FactoredRational::z(), Point::infinity()) == GaussianRational(0));
    CHECK(residue(FactoredRational::z(), Point(0)) == GaussianRational(0));
}

TEST_CASE("residue at higher-order poles") {
    // 1/(z^2 (z-1)) = -1/z - 1/z^2 + 1/(z-1)
    FactoredRational f = parse_rational("(z-0)^-2 / (z-1)");
    CHECK(residue(f, Point(0)) == GaussianRational(-1));
    CHECK(residue(f, Point(1)) == GaussianRational(1));
    // z^3 / (z-1)^3: residue at 1 is the z^2 coefficient of z^3 around 1, C(3,2) = 3
    CHECK(residue(parse_rational("(z-0)^3 * (z-1)^-3"), Point(1)) == GaussianRational(3));
    // z^2 at infinity: -w^-4 has no w^-1 term; 1 at infinity: -w^-2 neither
    CHECK(residue(parse_rational("(z-0)^2"), Point::infinity()) == GaussianRational(0));
    // z/(z-1) = 1 + 1/(z-1): residue at infinity is -1
    CHECK(residue(parse_rational("z/(z-1)"), Point::infinity()) == GaussianRational(-1));
}

TEST_CASE("residue_sum_check examples") {
    CHECK(recip::residue_sum_check(parse_rational("z^-1")).is_zero());
    CHECK(recip::residue_sum_check(parse_rational("1 / z / (z-1)")).is_zero());
    CHECK(recip::residue(parse_rational("(z-2)^3"), Point::infinity()).is_zero());
    CHECK(recip::residue_sum_check(parse_rational("(z-2)^3")).is_zero());
}

TEST_CASE("residues match contour quadrature") {
    recip::FixtureGenerator gen(99);
    int poles_checked = 0;
    for (int k = 0; k < 60; ++k) {
        FactoredRational f = gen.pool_rational(4, 3);
        CAPTURE(f.str());
        for (const auto& [a, m] : f.factors()) {
            if (m >= 0) continue;
            double r = 0.5 * std::min(nearest_other(f, a), 1.0);
            std::complex<double> expect = contour_integral(f, a.to_complex(), r);
            std::complex<double> got = residue(f, Point(a)).to_complex();
            CHECK(std::abs(got - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
            ++poles_checked;
        }
        // residue at infinity: minus the integral over a circle enclosing every finite point
        std::complex<double> at_inf = -contour_integral(f, 0.0, 6.0);
        std::complex<double> got = residue(f, Point::infinity()).to_complex();
        CHECK(std::abs(got - at_inf) <= 1e-9 * std::max(1.0, std::abs(at_inf)));
    }
    CHECK(poles_checked > 20);
}

TEST_CASE("tame symbol is antisymmetric and bimultiplicative") {
    recip::FixtureGenerator gen(17);
    for (int k = 0; k < 200; ++k) {
        FactoredRational f1 = gen.pool_rational();
        FactoredRational f2 = gen.pool_rational();
        FactoredRational g = gen.pool_rational();
        std::vector<Point> points{Point::infinity()};
        for (const auto* h : {&f1, &f2, &g}) {
            for (const auto& [a, m] : h->factors()) points.emplace_back(a);
        }
        for (const Point& p : points) {
            CHECK(tame_symbol(f1, g, p) * tame_symbol(g, f1, p) == GaussianRational(1));
            CHECK(tame_symbol(f1 * f2, g, p) == tame_symbol(f1, g, p) * tame_symbol(f2, g, p));
            CHECK(tame_symbol(g, f1 * f2, p) == tame_symbol(g, f1, p) * tame_symbol(g, f2, p));
        }
    }
}

TEST_CASE("chart coherence at infinity") {
    recip::FixtureGenerator gen(23);
    for (int k = 0; k < 200; ++k) {
        FactoredRational f = gen.pool_rational();
        FactoredRational g = gen.pool_rational();
        CHECK(tame_symbol(f, g, Point::infinity()) ==
              tame_symbol(recip::substitute_infinity(f), recip::substitute_infinity(g), Point(0)));
    }
}

TEST_CASE("weil reciprocity and residue theorem on random functions") {
    recip::FixtureGenerator gen(31);
    for (int k = 0; k < 200; ++k) {
        FactoredRational f = gen.pool_rational();
        FactoredRational g = gen.pool_rational();
        CAPTURE(f.str());
        CAPTURE(g.str());
        CHECK(recip::weil_product(f, g) == GaussianRational(1));
        CHECK(recip::residue_sum_check(f).is_zero());
    }
}
