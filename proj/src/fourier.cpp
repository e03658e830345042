#include "fourier.hpp"

#include <mutex>

#include <fftw3.h>

namespace recip::detail {

namespace {

// fftw planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<std::complex<double>> transform(const std::vector<std::complex<double>>& x, int sign) {
    std::vector<std::complex<double>> in(x);
    std::vector<std::complex<double>> out(x.size());
    auto* pin = reinterpret_cast<fftw_complex*>(in.data());
    auto* pout = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(x.size()), pin, pout, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> forward_dft(const std::vector<std::complex<double>>& x) {
    return transform(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> backward_dft(const std::vector<std::complex<double>>& x) {
    return transform(x, FFTW_BACKWARD);
}

}  // namespace recip::detail
