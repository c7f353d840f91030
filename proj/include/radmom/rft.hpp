// SPDX-License-Identifier: Apache-2.0
//
// Ramanujan-Fourier analysis: finite-sample mean value, forward
// coefficients x_q, truncated reconstruction, the divisor-sum expansion,
// and the q-indexed power spectrum.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "radmom/moments.hpp"

namespace radmom {

/// Ramanujan-Fourier coefficients x_q for q = 1..Q of a t-sample record.
struct RftCoefficients {
    std::vector<std::complex<double>> coeffs;  // coeffs[q - 1] = x_q
    std::size_t max_order_q = 0;
    std::size_t sample_count = 0;
};

/// Finite-sample surrogate of the mean value A_v(x): the plain average
/// over the full record. Rejects the empty sequence.
std::complex<double> mean_value(std::span<const std::complex<double>> x);

/// Forward transform:
///     x_q = 1/phi(q) * 1/t * sum_{n=1..t} x(n) c_q(n).
/// c_q is real, so the formula applies to complex input coordinate-wise.
RftCoefficients rft_forward(std::span<const std::complex<double>> x,
                            std::size_t max_order_q);

/// Truncated reconstruction x(n) = sum_{q=1..Q} x_q c_q(n), n = 1..length.
std::vector<std::complex<double>> rft_inverse(const RftCoefficients& coeffs,
                                              std::size_t length);

/// Partial sum of the Ramanujan expansion of the divisor sum:
///     (pi^2 n / 6) * sum_{q=1..Q} c_q(n) / q^2,
/// which converges to sigma(n) as Q grows.
double divisor_sum_expansion(std::uint64_t n, std::size_t max_order_q);

/// q-indexed power spectrum: one bin per order with density
/// phi(q) |x_q|^2 (the per-order energy implied by the orthogonality
/// relation) labeled with the fundamental resonance frequency
/// f_q = 1/(q Ts). Bins are emitted in increasing q.
Spectrum rft_power_spectrum(const RftCoefficients& coeffs,
                            const RadarParams& params);

/// Default truncation order for spectrum analysis, min(64, t/2): orders
/// with fewer than two full periods in the record are unreliable.
std::size_t rft_default_max_order(std::size_t sample_count);

}  // namespace radmom
