// SPDX-License-Identifier: Apache-2.0
//
// Full estimator pipelines: one call per method from I/Q series to
// DopplerMoments, as run by the CLI and the acceptance suite.
#pragma once

#include <cstddef>

#include "radmom/moments.hpp"
#include "radmom/rft.hpp"

namespace radmom {

struct FftOptions {
    std::size_t fft_size = 0;  // 0: smallest power of two >= sample count
    WindowKind window = WindowKind::Rectangular;
    MomentConvention convention = MomentConvention::Paper;
};

struct RftOptions {
    std::size_t max_order_q = 0;  // 0: rft_pipeline_max_order(t)
};

/// Truncation order used by the RFT estimator pipeline when none is
/// given: min(12, t/2). The frequency labels 1/(q Ts) read each order as
/// its fundamental resonance; orders beyond the first sub-harmonic onset
/// capture energy at p/q ~ 2 nu, 3 nu, ... and would be mislabeled, so
/// the moment stage keeps the ladder short. The full-depth default for
/// spectrum plots is rft_default_max_order.
std::size_t rft_pipeline_max_order(std::size_t sample_count);

std::size_t next_pow2(std::size_t n);

/// Pulse-pair moments: power_estimate, pp_velocity, pp_width.
DopplerMoments estimate_pp(const IqSeries& z);

/// Periodogram moments; the normalizing power is the noise-corrected
/// spectrum sum.
DopplerMoments estimate_fft(const IqSeries& z, const FftOptions& opt = {});
Spectrum fft_spectrum(const IqSeries& z, const FftOptions& opt = {});

/// Ramanujan-spectrum moments: rft_forward -> rft_power_spectrum ->
/// rft_moments.
DopplerMoments estimate_rft(const IqSeries& z, const RftOptions& opt = {});
Spectrum rft_spectrum(const IqSeries& z, const RftOptions& opt = {});

DopplerMoments estimate(const IqSeries& z, Method method,
                        const FftOptions& fft_opt = {},
                        const RftOptions& rft_opt = {});

}  // namespace radmom
