// SPDX-License-Identifier: Apache-2.0
//
// Thin FFTW3 wrapper, internal to the library. Plans are cached per
// (size, direction) behind a mutex; fftw_execute_dft on caller buffers is
// thread safe, so concurrent transforms only contend on plan creation.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace radmom::detail {

/// Unscaled forward DFT, X(k) = sum_n x(n) exp(-2 pi i k n / size).
/// Input shorter than size is zero padded.
std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x,
                                              std::size_t size);

/// Unscaled backward DFT, x(n) = sum_k X(k) exp(+2 pi i k n / size).
std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> x,
                                               std::size_t size);

}  // namespace radmom::detail
