#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "recip/circle.hpp"
#include "recip/factored_rational.hpp"
#include "recip/gaussian_rational.hpp"

namespace recip {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultSamples = 4096;
inline constexpr double kDefaultTolerance = 1e-8;
/// Adjacent samples must satisfy |Arg(s[k+1] / s[k])| < pi - margin.
inline constexpr double kAdjacencyMargin = 1e-3;

/// Uniform samples of a C*-valued function on an oriented circle. Sample k sits
/// at parameter 2 pi k / N, measured in the positive direction of the
/// circle's orientation.
class SampledLoop {
public:
    /// Throws DomainError unless N is a power of two >= 16, SamplingError on a
    /// zero sample or when the adjacency condition fails ("under-sampled loop").
    SampledLoop(OrientedCircle circle, std::vector<Complex> samples,
                std::optional<FactoredRational> source = std::nullopt);

    /// Samples an arbitrary callable z -> f(z) along the circle.
    template <typename F>
    static SampledLoop sample(const OrientedCircle& circle, std::size_t n, F&& fn) {
        std::vector<Complex> values(n);
        for (std::size_t k = 0; k < n; ++k) values[k] = fn(circle.point(parameter(k, n)));
        return SampledLoop(circle, std::move(values));
    }

    static double parameter(std::size_t k, std::size_t n);

    const OrientedCircle& circle() const noexcept { return circle_; }
    std::span<const Complex> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    const Complex& operator[](std::size_t k) const { return samples_[k]; }
    const std::optional<FactoredRational>& source() const noexcept { return source_; }

private:
    OrientedCircle circle_;
    std::vector<Complex> samples_;
    std::optional<FactoredRational> source_;
};

/// A branch of log f along the loop, cut at the base sample.
struct LogBranch {
    std::size_t base_index = 0;
    std::vector<Complex> values;
    /// Continuation across the cut minus the starting value; 2 pi i times the winding number.
    Complex wrap_defect;
};

/// Samples f on the circle. Throws OnContourError if a zero or pole of f lies
/// exactly on the circle.
SampledLoop restrict(const FactoredRational& f, const OrientedCircle& circle, std::size_t n = kDefaultSamples);

/// Throws SamplingError ("ambiguous winding") if the accumulated argument is
/// more than 0.25 turns away from an integer.
long winding_number(const SampledLoop& loop);

LogBranch log_continuation(const SampledLoop& loop, std::size_t base_index = 0);

/// d(log f)/d theta along the circle, from the factored form.
std::vector<Complex> dlog_exact(const FactoredRational& f, const OrientedCircle& circle,
                                std::size_t n = kDefaultSamples);

/// d(log f)/d theta from the samples alone, by spectral differentiation of the
/// periodic part of the log branch.
std::vector<Complex> dlog_spectral(const SampledLoop& loop);

/// The pairing T(f, g) = exp((1/2 pi i) int log f dg/g) g(x0)^{-nu(f)}, with x0
/// the sample at `base_index`. dg/g comes from `g_dlog` when given, from the
/// loop's factored source when present, and from dlog_spectral otherwise.
Complex t_pairing(const SampledLoop& f_loop, const SampledLoop& g_loop,
                  std::optional<std::span<const Complex>> g_dlog = std::nullopt, std::size_t base_index = 0);

/// Exact value of T on a circle: product of tame symbols at the zeros and poles
/// of f and g strictly inside, inverted for CW.
GaussianRational t_pairing_oracle(const FactoredRational& f, const FactoredRational& g, const OrientedCircle& circle);

/// Winding number computed exactly from the factored form: sum of multiplicities
/// strictly inside the circle, negated for CW.
long enclosed_multiplicity(const FactoredRational& f, const OrientedCircle& circle);

/// CSV with columns theta,re,im,arg (arg is the unwrapped argument).
void write_loop_csv(std::ostream& os, const SampledLoop& loop);

}  // namespace recip
