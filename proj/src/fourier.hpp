#pragma once

#include <complex>
#include <vector>

namespace recip::detail {

/// Unnormalized forward DFT, X_k = sum_j x_j e^{-2 pi i jk/N}.
std::vector<std::complex<double>> forward_dft(const std::vector<std::complex<double>>& x);

/// Unnormalized backward DFT, x_j = sum_k X_k e^{+2 pi i jk/N}.
std::vector<std::complex<double>> backward_dft(const std::vector<std::complex<double>>& x);

}  // namespace recip::detail
