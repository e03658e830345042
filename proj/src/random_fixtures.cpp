#include "recip/random_fixtures.hpp"

#include "recip/error.hpp"
#include "recip/loop.hpp"
#include "recip/symbols.hpp"

namespace recip {

namespace {

// Exact: |a - c| <= 3r/4 or |a - c| >= 5r/4.
bool clear_of_contour(const GaussianRational& a, const OrientedCircle& c) {
    Rational d2 = (a - c.center()).norm();
    Rational r2 = c.radius() * c.radius();
    return d2 * 16 <= r2 * 9 || d2 * 16 >= r2 * 25;
}

bool moderate(const GaussianRational& x) {
    const Rational bound2(FixtureGenerator::kMagnitudeBound * FixtureGenerator::kMagnitudeBound);
    Rational n = x.norm();
    return n <= bound2 && n * bound2 >= 1;
}

}  // namespace

const std::vector<GaussianRational>& FixtureGenerator::root_pool() {
    static const std::vector<GaussianRational> pool{
        GaussianRational(0),
        GaussianRational(1),
        GaussianRational(-1),
        GaussianRational(2),
        GaussianRational(-2),
        GaussianRational::i(),
        -GaussianRational::i(),
        GaussianRational(1) + GaussianRational::i(),
        GaussianRational(1) - GaussianRational::i(),
        GaussianRational(Rational(1, 2)),
        GaussianRational(3),
    };
    return pool;
}

long FixtureGenerator::uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

GaussianRational FixtureGenerator::grid_point(long half_extent, long denominator) {
    Rational re(uniform(-half_extent, half_extent), denominator);
    Rational im(uniform(-half_extent, half_extent), denominator);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

GaussianRational FixtureGenerator::small_unit() {
    static const std::vector<GaussianRational> units{
        GaussianRational(1), GaussianRational(-1), GaussianRational(2), GaussianRational(Rational(1, 2)),
        GaussianRational::i(), GaussianRational(Rational(3), Rational(-1)),
    };
    return units[static_cast<std::size_t>(uniform(0, static_cast<long>(units.size()) - 1))];
}

FactoredRational FixtureGenerator::pool_rational(int max_factors, int max_mult) {
    const auto& pool = root_pool();
    FactoredRational f = FactoredRational::constant(small_unit());
    long count = uniform(0, max_factors);
    for (long k = 0; k < count; ++k) {
        long m = uniform(1, max_mult) * (uniform(0, 1) == 0 ? -1 : 1);
        f *= FactoredRational::linear(pool[static_cast<std::size_t>(uniform(0, static_cast<long>(pool.size()) - 1))], m);
    }
    return f;
}

FixtureGenerator::LoopCase FixtureGenerator::loop_case(int max_factors, int max_mult) {
    while (true) {
        OrientedCircle circle(grid_point(4, 4), Rational(uniform(2, 8), 4),
                              uniform(0, 1) == 0 ? Orientation::CCW : Orientation::CW);
        auto make = [&] {
            FactoredRational f = FactoredRational::constant(small_unit());
            long count = uniform(0, max_factors);
            for (long k = 0; k < count; ++k) {
                GaussianRational a = grid_point(12, 4);
                while (!clear_of_contour(a, circle)) a = grid_point(12, 4);
                long m = uniform(1, max_mult) * (uniform(0, 1) == 0 ? -1 : 1);
                f *= FactoredRational::linear(a, m);
            }
            return f;
        };
        FactoredRational f = make();
        FactoredRational g = make();
        FactoredRational h = make();
        if (moderate(t_pairing_oracle(f, g, circle)) && moderate(t_pairing_oracle(h, g, circle)) &&
            moderate(t_pairing_oracle(f * h, g, circle))) {
            return {circle, f, g, h};
        }
    }
}

FixtureGenerator::SmallCircleCase FixtureGenerator::small_circle_case() {
    while (true) {
        FactoredRational f = pool_rational(3, 2);
        FactoredRational g = pool_rational(3, 2);
        std::vector<GaussianRational> points;
        for (const auto& [a, m] : f.factors()) points.push_back(a);
        for (const auto& [a, m] : g.factors()) points.push_back(a);
        if (points.empty()) continue;
        GaussianRational p = points[static_cast<std::size_t>(uniform(0, static_cast<long>(points.size()) - 1))];
        GaussianRational center = p + grid_point(1, 16);
        OrientedCircle circle(center, Rational(uniform(2, 4), 16));
        bool ok = clear_of_contour(p, circle) && circle.encloses(p);
        for (const auto& a : points) {
            if (a != p && !(clear_of_contour(a, circle) && !circle.encloses(a))) ok = false;
        }
        if (ok && moderate(tame_symbol(f, g, Point(p)))) return {circle, f, g, p};
    }
}

FixtureGenerator::DomainCase FixtureGenerator::domain_case(int max_holes, int max_factors, int max_mult) {
    OrientedCircle outer(GaussianRational(0), Rational(uniform(3, 5)));
    std::vector<OrientedCircle> holes;
    long want = uniform(0, max_holes);
    for (int attempt = 0; static_cast<long>(holes.size()) < want && attempt < 200; ++attempt) {
        OrientedCircle h(grid_point(8, 4), Rational(uniform(2, 6), 8));
        std::vector<OrientedCircle> trial = holes;
        trial.push_back(h);
        try {
            BorderedDomain probe(outer, trial);
            holes = std::move(trial);
        } catch (const DomainError&) {
        }
    }
    BorderedDomain domain(outer, holes);

    auto random_root = [&]() -> GaussianRational {
        // inside a hole, within 3/4 of its radius, or beyond 5/4 of the outer radius
        long slot = uniform(0, static_cast<long>(holes.size()));
        if (slot < static_cast<long>(holes.size())) {
            const OrientedCircle& h = holes[static_cast<std::size_t>(slot)];
            while (true) {
                GaussianRational offset(Rational(uniform(-8, 8), 8) * h.radius(), Rational(uniform(-8, 8), 8) * h.radius());
                GaussianRational a = h.center() + offset;
                if (clear_of_contour(a, h) && h.encloses(a)) return a;
            }
        }
        while (true) {
            GaussianRational a = grid_point(4 * 8, 4);
            if (clear_of_contour(a, outer) && !outer.encloses(a)) return a;
        }
    };
    auto make = [&] {
        FactoredRational f = FactoredRational::constant(small_unit());
        long count = uniform(0, max_factors);
        for (long k = 0; k < count; ++k) {
            long m = uniform(1, max_mult) * (uniform(0, 1) == 0 ? -1 : 1);
            f *= FactoredRational::linear(random_root(), m);
        }
        return f;
    };
    while (true) {
        FactoredRational f = make();
        FactoredRational g = make();
        bool ok = true;
        for (const auto& value : tame_circle_oracle(f, g, domain)) ok = ok && moderate(value);
        if (ok) return {domain, f, g};
    }
}

}  // namespace recip
