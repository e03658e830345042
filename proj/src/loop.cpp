#include "recip/loop.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "fourier.hpp"
#include "recip/error.hpp"
#include "recip/symbols.hpp"

namespace recip {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_grid(std::size_t n) {
    if (n < 16 || !is_power_of_two(n)) {
        throw DomainError("sample count must be a power of two >= 16, got " + std::to_string(n));
    }
}

void require_off_contour(const FactoredRational& f, const OrientedCircle& circle) {
    for (const auto& [a, m] : f.factors()) {
        if (circle.locate(a) == Side::On) {
            throw OnContourError("divisor point on contour: " + a.str() + " lies on " + circle.str());
        }
    }
}

// Principal argument of s[k+1]/s[k], cyclically.
double step_argument(std::span<const Complex> s, std::size_t k) {
    return std::arg(s[(k + 1) % s.size()] / s[k]);
}

// Wavenumber of DFT slot k on an N-point grid; the Nyquist slot maps to 0.
double wavenumber(std::size_t k, std::size_t n) {
    if (2 * k == n) return 0.0;
    return 2 * k < n ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
}

}  // namespace

SampledLoop::SampledLoop(OrientedCircle circle, std::vector<Complex> samples, std::optional<FactoredRational> source)
    : circle_(std::move(circle)), samples_(std::move(samples)), source_(std::move(source)) {
    require_grid(samples_.size());
    for (std::size_t k = 0; k < samples_.size(); ++k) {
        if (samples_[k] == Complex(0.0, 0.0) || !std::isfinite(std::abs(samples_[k]))) {
            throw SamplingError("loop sample " + std::to_string(k) + " is not in C*");
        }
    }
    for (std::size_t k = 0; k < samples_.size(); ++k) {
        if (std::abs(step_argument(samples_, k)) >= kPi - kAdjacencyMargin) {
            throw SamplingError("under-sampled loop: argument jump at sample " + std::to_string(k) + " on " +
                                circle_.str());
        }
    }
}

double SampledLoop::parameter(std::size_t k, std::size_t n) {
    return kTwoPi * static_cast<double>(k) / static_cast<double>(n);
}

SampledLoop restrict(const FactoredRational& f, const OrientedCircle& circle, std::size_t n) {
    require_grid(n);
    require_off_contour(f, circle);
    std::vector<Complex> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = f.evaluate(circle.point(SampledLoop::parameter(k, n)));
    return SampledLoop(circle, std::move(values), f);
}

long winding_number(const SampledLoop& loop) {
    long double acc = 0.0L;
    for (std::size_t k = 0; k < loop.size(); ++k) acc += step_argument(loop.samples(), k);
    double turns = static_cast<double>(acc) / kTwoPi;
    double nearest = std::round(turns);
    if (std::abs(turns - nearest) >= 0.25) {
        throw SamplingError("ambiguous winding: accumulated " + std::to_string(turns) + " turns");
    }
    return static_cast<long>(nearest);
}

LogBranch log_continuation(const SampledLoop& loop, std::size_t base_index) {
    const std::size_t n = loop.size();
    if (base_index >= n) throw DomainError("base index out of range");
    auto s = loop.samples();
    LogBranch branch;
    branch.base_index = base_index;
    branch.values.resize(n);
    // Each value is the principal log plus 2 pi i times an integer sheet index,
    // so rounding does not accumulate along the loop.
    double unwrapped = std::arg(s[base_index]);
    branch.values[base_index] = std::log(s[base_index]);
    for (std::size_t j = 1; j < n; ++j) {
        std::size_t k = (base_index + j) % n;
        std::size_t prev = (base_index + j - 1) % n;
        unwrapped += step_argument(s, prev);
        Complex principal = std::log(s[k]);
        double sheet = std::round((unwrapped - principal.imag()) / kTwoPi);
        branch.values[k] = principal + kI * (kTwoPi * sheet);
        unwrapped = branch.values[k].imag();
    }
    std::size_t last = (base_index + n - 1) % n;
    branch.wrap_defect = branch.values[last] + std::log(s[base_index] / s[last]) - branch.values[base_index];
    return branch;
}

std::vector<Complex> dlog_exact(const FactoredRational& f, const OrientedCircle& circle, std::size_t n) {
    require_grid(n);
    require_off_contour(f, circle);
    const Complex c = circle.center().to_complex();
    const Complex spin = circle.orientation() == Orientation::CCW ? kI : -kI;
    std::vector<Complex> out(n, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        Complex z = circle.point(SampledLoop::parameter(k, n));
        Complex dz = spin * (z - c);
        Complex sum(0.0, 0.0);
        for (const auto& [a, m] : f.factors()) sum += static_cast<double>(m) * dz / (z - a.to_complex());
        out[k] = sum;
    }
    return out;
}

std::vector<Complex> dlog_spectral(const SampledLoop& loop) {
    const std::size_t n = loop.size();
    const long nu = winding_number(loop);
    LogBranch branch = log_continuation(loop, 0);
    std::vector<Complex> periodic(n);
    for (std::size_t j = 0; j < n; ++j) {
        periodic[j] = branch.values[j] - kI * static_cast<double>(nu) * SampledLoop::parameter(j, n);
    }
    std::vector<Complex> coeffs = detail::forward_dft(periodic);
    for (std::size_t k = 0; k < n; ++k) coeffs[k] *= kI * wavenumber(k, n) / static_cast<double>(n);
    std::vector<Complex> out = detail::backward_dft(coeffs);
    for (auto& v : out) v += kI * static_cast<double>(nu);
    return out;
}

Complex t_pairing(const SampledLoop& f_loop, const SampledLoop& g_loop, std::optional<std::span<const Complex>> g_dlog,
                  std::size_t base_index) {
    const std::size_t n = f_loop.size();
    if (g_loop.size() != n || !(f_loop.circle() == g_loop.circle())) {
        throw DomainError("mismatched grids: both loops must share circle and sample count");
    }
    if (g_dlog && g_dlog->size() != n) throw DomainError("mismatched grids: dg/g has the wrong length");
    if (base_index >= n) throw DomainError("base index out of range");

    std::vector<Complex> v;
    if (g_dlog) {
        v.assign(g_dlog->begin(), g_dlog->end());
    } else if (g_loop.source()) {
        v = dlog_exact(*g_loop.source(), g_loop.circle(), n);
    } else {
        v = dlog_spectral(g_loop);
    }

    const long nu = winding_number(f_loop);
    const LogBranch branch = log_continuation(f_loop, base_index);
    const double h = kTwoPi / static_cast<double>(n);

    // log f = i nu s + p(s) with p periodic, where s runs from 0 at the base point.
    std::vector<Complex> v_rolled(n);
    std::complex<long double> acc(0.0L, 0.0L);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = (base_index + j) % n;
        v_rolled[j] = v[k];
        Complex p = branch.values[k] - kI * static_cast<double>(nu) * (h * static_cast<double>(j));
        acc += std::complex<long double>(p) * std::complex<long double>(v[k]);
    }
    Complex periodic_part = Complex(acc) * h;

    // int_0^{2pi} s v(s) ds from the Fourier coefficients of v.
    Complex linear_part(0.0, 0.0);
    if (nu != 0) {
        std::vector<Complex> c = detail::forward_dft(v_rolled);
        const double inv_n = 1.0 / static_cast<double>(n);
        // sum over k != 0 of c_k / (i k); the Nyquist slot cancels between +-N/2
        std::complex<long double> tail(0.0L, 0.0L);
        for (std::size_t k = 1; k < n; ++k) {
            double w = wavenumber(k, n);
            if (w == 0.0) continue;
            tail += std::complex<long double>(c[k] / (kI * w));
        }
        Complex moment = (2.0 * kPi * kPi * c[0] + kTwoPi * Complex(tail)) * inv_n;
        linear_part = kI * static_cast<double>(nu) * moment;
    }

    Complex integral = periodic_part + linear_part;
    Complex value = std::exp(integral / (kTwoPi * kI));
    return value * std::pow(g_loop[base_index], -static_cast<double>(nu));
}

GaussianRational t_pairing_oracle(const FactoredRational& f, const FactoredRational& g, const OrientedCircle& circle) {
    require_off_contour(f, circle);
    require_off_contour(g, circle);
    std::set<GaussianRational> inside;
    for (const auto& [a, m] : f.factors()) {
        if (circle.encloses(a)) inside.insert(a);
    }
    for (const auto& [a, m] : g.factors()) {
        if (circle.encloses(a)) inside.insert(a);
    }
    GaussianRational product(1);
    for (const auto& a : inside) product *= tame_symbol(f, g, Point(a));
    return circle.orientation() == Orientation::CCW ? product : product.inverse();
}

long enclosed_multiplicity(const FactoredRational& f, const OrientedCircle& circle) {
    require_off_contour(f, circle);
    long total = 0;
    for (const auto& [a, m] : f.factors()) {
        if (circle.encloses(a)) total += m;
    }
    return circle.orientation() == Orientation::CCW ? total : -total;
}

void write_loop_csv(std::ostream& os, const SampledLoop& loop) {
    LogBranch branch = log_continuation(loop, 0);
    os << "theta,re,im,arg\n";
    os.precision(17);
    for (std::size_t k = 0; k < loop.size(); ++k) {
        os << SampledLoop::parameter(k, loop.size()) << ',' << loop[k].real() << ',' << loop[k].imag() << ','
           << branch.values[k].imag() << '\n';
    }
}

}  // namespace recip
