#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "recip/bordered.hpp"
#include "recip/circle.hpp"
#include "recip/factored_rational.hpp"

namespace recip {

/// Seeded generators of random functions, circles and domains for property
/// checks. The same seed always reproduces the same sequence.
class FixtureGenerator {
public:
    explicit FixtureGenerator(std::uint64_t seed) : rng_(seed) {}

    /// {0, +-1, +-2, +-i, 1+-i, 1/2, 3}
    static const std::vector<GaussianRational>& root_pool();

    /// Up to `max_factors` roots from the pool with multiplicities in
    /// [-max_mult, max_mult] \ {0}, and a small random unit.
    FactoredRational pool_rational(int max_factors = 4, int max_mult = 3);

    /// Exact oracle values produced by the case generators stay within
    /// [1/kMagnitudeBound, kMagnitudeBound] in modulus, so that an absolute
    /// tolerance is meaningful in double precision.
    static constexpr long kMagnitudeBound = 10000;

    struct LoopCase {
        OrientedCircle circle;
        FactoredRational f;
        FactoredRational g;
        /// Third function for bimultiplicativity checks.
        FactoredRational h;
    };

    /// Random circle and three functions whose zeros and poles keep an exact
    /// distance of at least radius/4 from the contour.
    LoopCase loop_case(int max_factors = 3, int max_mult = 2);

    struct SmallCircleCase {
        OrientedCircle circle;
        FactoredRational f;
        FactoredRational g;
        /// The only zero or pole of f or g inside the circle.
        GaussianRational point;
    };

    /// Pool functions and a small circle around exactly one point of their joint divisor.
    SmallCircleCase small_circle_case();

    struct DomainCase {
        BorderedDomain domain;
        FactoredRational f;
        FactoredRational g;
    };

    /// Disk with 0..max_holes holes and two admissible functions, each zero or
    /// pole at least radius/4 away from every boundary circle.
    DomainCase domain_case(int max_holes = 3, int max_factors = 3, int max_mult = 2);

    long uniform(long lo, long hi);

private:
    GaussianRational grid_point(long half_extent, long denominator);
    GaussianRational small_unit();

    std::mt19937_64 rng_;
};

}  // namespace recip
