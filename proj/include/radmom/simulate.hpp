// SPDX-License-Identifier: Apache-2.0
//
// Synthetic weather-radar I/Q generator with known ground-truth moments.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "radmom/moments.hpp"

namespace radmom {

/// Identifier of the random source, recorded in output metadata.
/// Determinism is guaranteed per implementation, not across languages.
inline constexpr std::string_view kSimRngAlgorithm = "mt19937_64-boxmuller-v1";

/// Ground truth for one simulated range cell: a single Gaussian spectral
/// mode centered at f = 2 v / lambda with std sigma_f = 2 w / lambda,
/// plus complex white noise at the given SNR.
struct SimSpec {
    double power = 1.0;           // signal power, linear units
    double mean_velocity_mps = 0.0;
    double width_mps = 1.0;
    double snr_db = 20.0;
    std::size_t n_pulses = 64;
    std::uint64_t seed = 0;
    RadarParams params;

    /// Noise power implied by power and snr_db.
    double noise_power() const;

    /// Invariants: power > 0, 0 < width < lambda/(8 Ts),
    /// |velocity| < lambda/(4 Ts), n_pulses >= 2.
    void validate() const;
};

/// Deterministic given the full spec including seed. Synthesizes in the
/// spectrum domain: each DFT bin gets an independent complex Gaussian
/// draw with variance matching the target PSD plus the white noise floor,
/// then inverse transforms. The returned series' params carry the implied
/// noise power, and metadata records the truth and RNG identifier.
IqSeries generate(const SimSpec& spec);

}  // namespace radmom
