#include "recip/symbols.hpp"

#include <set>
#include <vector>

#include "recip/error.hpp"

namespace recip {

namespace {

using Series = std::vector<GaussianRational>;

Series multiply(const Series& a, const Series& b, std::size_t order) {
    Series c(order, GaussianRational(0));
    for (std::size_t i = 0; i < order && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < order && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// (t + d)^m truncated to `order` coefficients, d != 0. Uses the generalized
// binomial series d^m * sum_j C(m, j) (t/d)^j.
Series shifted_power(const GaussianRational& d, long m, std::size_t order) {
    Series s(order, GaussianRational(0));
    GaussianRational inv_d = d.inverse();
    GaussianRational term = d.pow(m);
    for (std::size_t j = 0; j < order; ++j) {
        s[j] = term;
        long jl = static_cast<long>(j);
        term *= GaussianRational(Rational(m - jl, jl + 1)) * inv_d;
        if (term.is_zero()) break;
    }
    return s;
}

GaussianRational finite_residue(const FactoredRational& f, const GaussianRational& p) {
    long pole_order = -valuation(f, Point(p));
    if (pole_order <= 0) return GaussianRational(0);
    auto order = static_cast<std::size_t>(pole_order);
    Series h(order, GaussianRational(0));
    h[0] = f.unit();
    for (const auto& [a, m] : f.factors()) {
        if (a == p) continue;
        h = multiply(h, shifted_power(p - a, m, order), order);
    }
    return h[order - 1];
}

}  // namespace

GaussianRational tame_symbol(const FactoredRational& f, const FactoredRational& g, const Point& p) {
    if (p.is_infinity()) return tame_symbol(substitute_infinity(f), substitute_infinity(g), Point(0));
    long vf = valuation(f, p);
    long vg = valuation(g, p);
    FactoredRational bracket = f.pow(vg) / g.pow(vf);
    if (valuation(bracket, p) != 0) {
        throw std::logic_error("tame symbol bracket has nonzero valuation at " + p.str());
    }
    GaussianRational value = eval(bracket, p.value());
    if ((vf * vg) % 2 != 0) value = -value;
    return value;
}

GaussianRational weil_product(const FactoredRational& f, const FactoredRational& g) {
    std::set<Point> support{Point::infinity()};
    for (const auto& [a, m] : f.factors()) support.insert(Point(a));
    for (const auto& [a, m] : g.factors()) support.insert(Point(a));
    GaussianRational product(1);
    for (const Point& p : support) product *= tame_symbol(f, g, p);
    return product;
}

GaussianRational residue(const FactoredRational& f, const Point& p) {
    if (!p.is_infinity()) return finite_residue(f, p.value());
    FactoredRational local = substitute_infinity(f) * FactoredRational(GaussianRational(-1), {{GaussianRational(0), -2}});
    return finite_residue(local, GaussianRational(0));
}

GaussianRational residue_sum_check(const FactoredRational& f) {
    GaussianRational sum(0);
    for (const auto& [a, m] : f.factors()) {
        if (m < 0) sum += residue(f, Point(a));
    }
    return sum + residue(f, Point::infinity());
}

}  // namespace recip
