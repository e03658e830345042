#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "recip/error.hpp"
#include "recip/loop.hpp"
#include "recip/parser.hpp"
#include "recip/random_fixtures.hpp"
#include "recip/symbols.hpp"

using recip::Complex;
using recip::FactoredRational;
using recip::GaussianRational;
using recip::OrientedCircle;
using recip::Orientation;
using recip::Rational;
using recip::SampledLoop;
using recip::parse_rational;

namespace {

constexpr double kPi = std::numbers::pi;

const OrientedCircle kUnit(GaussianRational(0), Rational(1));

SampledLoop power_loop(int k, std::size_t n = 256) {
    return SampledLoop::sample(kUnit, n, [k](Complex z) { return std::pow(z, k); });
}

double dist(Complex a, const GaussianRational& b) { return std::abs(a - b.to_complex()); }

}  // namespace

TEST_CASE("circle geometry is exact") {
    OrientedCircle c(GaussianRational(1), Rational(1, 2));
    CHECK(c.locate(GaussianRational(Rational(3, 2))) == recip::Side::On);
    CHECK(c.locate(GaussianRational(Rational(1), Rational(1, 2))) == recip::Side::On);
    CHECK(c.locate(GaussianRational(1)) == recip::Side::Inside);
    CHECK(c.locate(GaussianRational(2)) == recip::Side::Outside);
    CHECK_THROWS_AS(OrientedCircle(GaussianRational(0), Rational(0)), recip::DomainError);
    CHECK(c.reversed().orientation() == Orientation::CW);
    CHECK(std::abs(c.reversed().point(kPi / 2) - Complex(1.0, -0.5)) < 1e-15);
}

TEST_CASE("restrict") {
    SampledLoop loop = recip::restrict(FactoredRational::z(), kUnit, 64);
    for (std::size_t k = 0; k < 64; ++k) {
        CHECK(std::abs(loop[k] - std::polar(1.0, SampledLoop::parameter(k, 64))) < 1e-15);
    }
    SampledLoop five = recip::restrict(FactoredRational::constant(5), OrientedCircle(GaussianRational::i(), Rational(3)), 16);
    for (Complex s : five.samples()) CHECK(s == Complex(5.0, 0.0));
    CHECK_THROWS_WITH_AS(recip::restrict(parse_rational("(z-1)"), kUnit, 64), doctest::Contains("divisor point on contour"),
                         recip::OnContourError);
    // 3/5 + 4/5 i is on the unit circle exactly
    CHECK_THROWS_AS(recip::restrict(parse_rational("(z - 3/5 + 4/5i)^-2"), kUnit, 64), recip::OnContourError);
}

TEST_CASE("sample count and under-sampling are rejected") {
    CHECK_THROWS_AS(recip::restrict(FactoredRational::z(), kUnit, 8), recip::DomainError);
    CHECK_THROWS_AS(recip::restrict(FactoredRational::z(), kUnit, 100), recip::DomainError);
    // z^8 on 16 samples jumps half a turn per step
    CHECK_THROWS_WITH_AS(recip::restrict(parse_rational("(z-0)^8"), kUnit, 16), doctest::Contains("under-sampled"),
                         recip::SamplingError);
    // a root next to the chord between samples 0 and 1 sees them almost opposite
    const char* near_chord = "(z - 9619/10000 - 1913/10000i)";
    CHECK_THROWS_AS(recip::restrict(parse_rational(near_chord), kUnit, 16), recip::SamplingError);
    CHECK(recip::winding_number(recip::restrict(parse_rational(near_chord), kUnit, 64)) == 1);
    std::vector<Complex> with_zero(16, Complex(1.0, 0.0));
    with_zero[3] = 0.0;
    CHECK_THROWS_AS(SampledLoop(kUnit, with_zero), recip::SamplingError);
}

TEST_CASE("winding number") {
    for (int k = -3; k <= 3; ++k) CHECK(recip::winding_number(power_loop(k)) == k);
    CHECK(recip::winding_number(SampledLoop::sample(kUnit, 16, [](Complex) { return Complex(2.0, 1.0); })) == 0);
    CHECK(recip::winding_number(SampledLoop::sample(kUnit, 64, [](Complex z) { return 2.0 + z; })) == 0);
    // CW traversal negates
    OrientedCircle cw = kUnit.reversed();
    CHECK(recip::winding_number(recip::restrict(FactoredRational::z(), cw, 64)) == -1);
}

TEST_CASE("log continuation") {
    recip::LogBranch b = recip::log_continuation(power_loop(1, 64), 0);
    for (std::size_t k = 0; k < 64; ++k) {
        CHECK(std::abs(b.values[k] - Complex(0.0, SampledLoop::parameter(k, 64))) < 1e-13);
    }
    recip::LogBranch c = recip::log_continuation(
        SampledLoop::sample(kUnit, 32, [](Complex) { return Complex(-2.0, 0.5); }), 5);
    for (Complex v : c.values) CHECK(std::abs(v - std::log(Complex(-2.0, 0.5))) < 1e-15);
    CHECK(std::abs(c.wrap_defect) < 1e-15);

    recip::LogBranch d = recip::log_continuation(power_loop(2, 128), 17);
    CHECK(std::abs(d.wrap_defect - Complex(0.0, 4.0 * kPi)) < 1e-12);
    CHECK(std::abs(d.values[17] - std::log(power_loop(2, 128)[17])) < 1e-15);
}

TEST_CASE("dlog_exact") {
    for (Complex v : recip::dlog_exact(FactoredRational::z(), kUnit, 32)) CHECK(std::abs(v - Complex(0.0, 1.0)) < 1e-15);
    for (Complex v : recip::dlog_exact(FactoredRational::constant(3), kUnit, 32)) CHECK(v == Complex(0.0, 0.0));
    for (Complex v : recip::dlog_exact(parse_rational("(z-0)^2"), kUnit, 32)) {
        CHECK(std::abs(v - Complex(0.0, 2.0)) < 1e-15);
    }
    CHECK_THROWS_AS(recip::dlog_exact(parse_rational("(z-i)"), kUnit, 32), recip::OnContourError);
}

TEST_CASE("exact and spectral dlog agree") {
    recip::FixtureGenerator gen(8);
    for (int k = 0; k < 30; ++k) {
        auto lc = gen.loop_case();
        SampledLoop g = recip::restrict(lc.g, lc.circle, 1024);
        auto exact = recip::dlog_exact(lc.g, lc.circle, 1024);
        auto spectral = recip::dlog_spectral(SampledLoop(g.circle(), std::vector<Complex>(g.samples().begin(), g.samples().end())));
        double worst = 0.0;
        for (std::size_t j = 0; j < exact.size(); ++j) worst = std::max(worst, std::abs(exact[j] - spectral[j]));
        CAPTURE(lc.g.str());
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("t_pairing examples") {
    SampledLoop z = recip::restrict(FactoredRational::z(), kUnit, 256);
    SampledLoop two = recip::restrict(FactoredRational::constant(2), kUnit, 256);
    CHECK(std::abs(recip::t_pairing(z, z) - Complex(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(recip::t_pairing(z, two) - Complex(0.5, 0.0)) < 1e-12);
    CHECK(std::abs(recip::t_pairing(two, z) - Complex(2.0, 0.0)) < 1e-12);
}

TEST_CASE("t_pairing on loops without provenance") {
    // f = exp(Re z + 2) has winding 0, so T(f, z) = exp(mean of log f) = e^2.
    SampledLoop f = SampledLoop::sample(kUnit, 256, [](Complex w) { return std::exp(w.real() + 2.0); });
    SampledLoop z = SampledLoop::sample(kUnit, 256, [](Complex w) { return w; });
    CHECK(std::abs(recip::t_pairing(f, z) - std::exp(2.0)) < 1e-12);
    // T(z, f): int i theta (-sin theta) d theta = 2 pi i, so exp(1) * f(1)^-1 = e^-2.
    CHECK(std::abs(recip::t_pairing(z, f) - std::exp(-2.0)) < 1e-12);
    CHECK(std::abs(recip::t_pairing(f, z) * recip::t_pairing(z, f) - 1.0) < 1e-12);
}

TEST_CASE("t_pairing rejects mismatched grids") {
    SampledLoop a = recip::restrict(FactoredRational::z(), kUnit, 64);
    SampledLoop b = recip::restrict(FactoredRational::z(), kUnit, 128);
    SampledLoop c = recip::restrict(FactoredRational::z(), kUnit.reversed(), 64);
    CHECK_THROWS_WITH_AS(recip::t_pairing(a, b), doctest::Contains("mismatched grids"), recip::DomainError);
    CHECK_THROWS_AS(recip::t_pairing(a, c), recip::DomainError);
    std::vector<Complex> short_dlog(32);
    CHECK_THROWS_AS(recip::t_pairing(a, a, std::span<const Complex>(short_dlog)), recip::DomainError);
}

TEST_CASE("t_pairing_oracle examples") {
    FactoredRational z = FactoredRational::z();
    FactoredRational z3 = parse_rational("(z-3)");
    CHECK(recip::t_pairing_oracle(z, z, kUnit) == GaussianRational(-1));
    CHECK(recip::t_pairing_oracle(z, z3, kUnit) == GaussianRational(Rational(-1, 3)));
    CHECK(recip::t_pairing_oracle(z, z3, kUnit.reversed()) == GaussianRational(-3));
    CHECK_THROWS_AS(recip::t_pairing_oracle(z, parse_rational("(z+1)"), kUnit), recip::OnContourError);
}

TEST_CASE("numeric T matches the oracle on random loops") {
    recip::FixtureGenerator gen(41);
    for (int k = 0; k < 40; ++k) {
        auto lc = gen.loop_case();
        SampledLoop f = recip::restrict(lc.f, lc.circle);
        SampledLoop g = recip::restrict(lc.g, lc.circle);
        CAPTURE(lc.circle.str());
        CAPTURE(lc.f.str());
        CAPTURE(lc.g.str());
        CHECK(dist(recip::t_pairing(f, g), recip::t_pairing_oracle(lc.f, lc.g, lc.circle)) <= 1e-8);
    }
}

TEST_CASE("pairing algebra on random loops") {
    recip::FixtureGenerator gen(43);
    for (int k = 0; k < 30; ++k) {
        auto lc = gen.loop_case();
        SampledLoop f = recip::restrict(lc.f, lc.circle);
        SampledLoop g = recip::restrict(lc.g, lc.circle);
        SampledLoop h = recip::restrict(lc.h, lc.circle);
        SampledLoop fh = recip::restrict(lc.f * lc.h, lc.circle);
        Complex tfg = recip::t_pairing(f, g);
        CHECK(std::abs(tfg * recip::t_pairing(g, f) - 1.0) <= 1e-8);
        CHECK(std::abs(recip::t_pairing(fh, g) - tfg * recip::t_pairing(h, g)) <= 1e-8);
        for (std::size_t base : {1UL, 777UL, 2048UL, 4095UL}) {
            CHECK(std::abs(recip::t_pairing(f, g, std::nullopt, base) - tfg) <= 1e-9);
        }
        SampledLoop fr = recip::restrict(lc.f, lc.circle.reversed());
        SampledLoop gr = recip::restrict(lc.g, lc.circle.reversed());
        CHECK(std::abs(recip::t_pairing(fr, gr) * tfg - 1.0) <= 1e-9);
    }
}

TEST_CASE("winding number equals the enclosed multiplicity") {
    recip::FixtureGenerator gen(47);
    for (int k = 0; k < 100; ++k) {
        auto lc = gen.loop_case(4, 3);
        CHECK(recip::winding_number(recip::restrict(lc.f, lc.circle)) == recip::enclosed_multiplicity(lc.f, lc.circle));
    }
}

TEST_CASE("refinement does not increase the oracle defect") {
    // roots within 1/20 of the unit circle, so N = 256 is visibly unconverged
    const std::vector<std::pair<const char*, const char*>> cases{
        {"(z - 19/20)", "(z - 21/20)^-1 * (z + 1/2)"},
        {"2 * (z - 19/20i)^2", "(z + 21/20)"},
        {"(z - 1/2) / (z - 11/10)", "(z - 9/10 - 1/5i)"},
    };
    for (auto [fs, gs] : cases) {
        FactoredRational fr = parse_rational(fs);
        FactoredRational gr = parse_rational(gs);
        GaussianRational oracle = recip::t_pairing_oracle(fr, gr, kUnit);
        auto defect = [&](std::size_t n) {
            return dist(recip::t_pairing(recip::restrict(fr, kUnit, n), recip::restrict(gr, kUnit, n)), oracle);
        };
        double coarse = defect(256);
        double fine = defect(2048);
        CAPTURE(fs);
        CHECK(coarse > 1e-10);
        CHECK(fine <= coarse);
        CHECK(fine <= 1e-10);
    }
}

TEST_CASE("loop CSV export") {
    std::ostringstream os;
    recip::write_loop_csv(os, power_loop(2, 16));
    std::string csv = os.str();
    CHECK(csv.rfind("theta,re,im,arg\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
}
