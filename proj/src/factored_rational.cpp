#include "recip/factored_rational.hpp"

#include <sstream>

#include "recip/error.hpp"

namespace recip {

std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) {
        return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
    }
    return a.value() <=> b.value();
}

Divisor::Divisor(const Map& entries) {
    for (const auto& [p, m] : entries) {
        if (m != 0) entries_.emplace(p, m);
    }
}

long Divisor::multiplicity(const Point& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [p, m] : entries_) d += m;
    return d;
}

FactoredRational::FactoredRational(GaussianRational unit, const FactorMap& factors) : unit_(std::move(unit)) {
    if (unit_.is_zero()) throw MathError("zero unit in factored rational");
    merge(factors, 1);
}

FactoredRational FactoredRational::linear(GaussianRational root, long multiplicity) {
    FactoredRational f;
    if (multiplicity != 0) f.factors_.emplace(std::move(root), multiplicity);
    return f;
}

long FactoredRational::degree() const {
    long d = 0;
    for (const auto& [a, m] : factors_) d += m;
    return d;
}

void FactoredRational::merge(const FactorMap& other, long sign) {
    for (const auto& [root, m] : other) {
        long& slot = factors_[root];
        slot += sign * m;
        if (slot == 0) factors_.erase(root);
    }
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    unit_ *= o.unit_;
    merge(o.factors_, 1);
    return *this;
}

FactoredRational& FactoredRational::operator/=(const FactoredRational& o) {
    unit_ /= o.unit_;
    merge(o.factors_, -1);
    return *this;
}

FactoredRational FactoredRational::inverse() const { return FactoredRational() / *this; }

FactoredRational FactoredRational::pow(long exponent) const {
    FactoredRational r;
    if (exponent == 0) return r;
    r.unit_ = unit_.pow(exponent);
    for (const auto& [a, m] : factors_) r.factors_.emplace(a, m * exponent);
    return r;
}

std::complex<double> FactoredRational::evaluate(std::complex<double> z) const {
    std::complex<double> v = unit_.to_complex();
    for (const auto& [a, m] : factors_) {
        std::complex<double> d = z - a.to_complex();
        // integer power by squaring keeps this exact for small m
        std::complex<double> p(1.0, 0.0);
        long e = m < 0 ? -m : m;
        std::complex<double> base = d;
        while (e != 0) {
            if (e & 1) p *= base;
            e >>= 1;
            if (e != 0) base *= base;
        }
        v = m < 0 ? v / p : v * p;
    }
    return v;
}

std::string FactoredRational::str() const {
    std::ostringstream os;
    bool first = true;
    if (unit_ != GaussianRational(1) || factors_.empty()) {
        os << unit_.str();
        first = false;
    }
    for (const auto& [a, m] : factors_) {
        if (!first) os << " * ";
        first = false;
        if (a.is_zero()) {
            os << "(z - 0)";
        } else {
            os << "(z - " << a.str() << ")";
        }
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

GaussianRational eval(const FactoredRational& f, const GaussianRational& p) {
    GaussianRational v = f.unit();
    for (const auto& [a, m] : f.factors()) {
        GaussianRational d = p - a;
        if (d.is_zero()) throw MathError("pole or zero at evaluation point " + p.str());
        v *= d.pow(m);
    }
    return v;
}

long valuation(const FactoredRational& f, const Point& p) {
    if (p.is_infinity()) return -f.degree();
    auto it = f.factors().find(p.value());
    return it == f.factors().end() ? 0 : it->second;
}

Divisor divisor(const FactoredRational& f) {
    Divisor::Map m;
    for (const auto& [a, k] : f.factors()) m.emplace(Point(a), k);
    m.emplace(Point::infinity(), -f.degree());
    return Divisor(m);
}

FactoredRational substitute_infinity(const FactoredRational& f) {
    // 1/w - a = -a (w - 1/a) / w for a != 0, and 1/w = w^-1.
    GaussianRational unit = f.unit();
    FactoredRational::FactorMap factors;
    long w_power = 0;
    for (const auto& [a, m] : f.factors()) {
        w_power -= m;
        if (a.is_zero()) continue;
        unit *= (-a).pow(m);
        factors.emplace(a.inverse(), m);
    }
    if (w_power != 0) factors.emplace(GaussianRational(0), w_power);
    return FactoredRational(unit, factors);
}

}  // namespace recip
