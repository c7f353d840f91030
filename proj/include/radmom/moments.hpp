// SPDX-License-Identifier: Apache-2.0
//
// Core domain types for Doppler moment estimation plus the time-domain
// (pulse-pair) and frequency-domain (periodogram) estimators.
#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace radmom {

/// Radar system constants that fix the velocity scaling.
struct RadarParams {
    double wavelength_m = 0.0;  // lambda
    double prt_s = 0.0;         // pulse repetition time Ts
    double noise_power = 0.0;   // N, linear units

    /// Largest unambiguous radial velocity, lambda / (4 Ts).
    double nyquist_velocity() const { return wavelength_m / (4.0 * prt_s); }

    /// Throws std::invalid_argument unless wavelength and PRT are positive
    /// and noise power is nonnegative.
    void validate() const;
};

/// Complex I/Q time series Z(k Ts) for one range cell.
/// Header keys not interpreted by this library ride along in `metadata`
/// so that file round trips preserve them.
struct IqSeries {
    std::vector<std::complex<double>> samples;
    RadarParams params;
    std::vector<std::pair<std::string, std::string>> metadata;
};

enum class Method { PulsePair, Fft, Rft };

const char* method_name(Method m);  // "pp", "fft", "rft"

/// Estimated spectral moments for one range cell.
struct DopplerMoments {
    double power = 0.0;             // P-hat, linear units
    double mean_velocity_mps = 0.0; // v-hat
    double width_mps = 0.0;         // w-hat
    Method method = Method::PulsePair;
};

enum class SpectrumKind { DftPeriodogram, RftOrder };

struct SpectrumBin {
    double frequency_hz = 0.0;
    double density = 0.0;
};

/// Discrete power-spectral-density estimate. For DftPeriodogram the bins
/// run k = -M/2 .. M/2-1 in increasing frequency; for RftOrder one bin per
/// Ramanujan order q in increasing q (decreasing frequency label).
struct Spectrum {
    std::vector<SpectrumBin> bins;
    SpectrumKind kind = SpectrumKind::DftPeriodogram;

    double total_density() const;
};

enum class WindowKind { Rectangular, Hann };

/// Normalization of the moment sums: Paper divides the bin index by M-1,
/// Conventional by M. The two differ by a factor M/(M-1) on the reported
/// velocity.
enum class MomentConvention { Paper, Conventional };

/// Lag-1 autocorrelation, averaged over the m-1 available sample pairs:
///     R(Ts) = 1/(m-1) * sum conj(Z(k)) Z(k+1).
/// Requires at least 2 samples.
std::complex<double> autocorr_lag1(const IqSeries& z);

/// Mean of |Z|^2 minus params.noise_power, clamped at zero.
/// Requires at least 1 sample.
double power_estimate(const IqSeries& z);

/// Pulse-pair mean velocity, lambda/(4 pi Ts) * arg R(Ts), in
/// (-v_nyquist, v_nyquist]. Throws DegenerateInput when R(Ts) == 0.
double pp_velocity(const IqSeries& z);

/// Pulse-pair spectrum width,
///     w = sqrt( lambda^2/(8 pi^2 Ts^2) * (1 - |R(Ts)| / P) ),
/// with the bracket clamped to [0, 1]. Throws DegenerateInput when the
/// power estimate is zero.
double pp_width(const IqSeries& z);

/// Periodogram |DFT(Z)|^2 / m on fft_size points, bins ordered
/// k = -M/2 .. M/2-1 with frequency k/(M Ts). fft_size must be a power of
/// two >= the sample count. The optional window is applied before the
/// transform; the normalization divides by sum(w^2) (== m for the
/// rectangular default) so the white-noise floor stays at N per bin.
Spectrum periodogram(const IqSeries& z, std::size_t fft_size,
                     WindowKind window = WindowKind::Rectangular);

/// First spectral moment of a DFT periodogram scaled to velocity:
///     v = lambda/(2 P Ts) * sum (S(k) - N) * k/(M-1)
/// (k/M under the Conventional flag). N = params.noise_power is removed
/// per bin, signed, so noise residuals cancel in expectation.
/// Throws DegenerateInput when p_hat <= 0.
double fft_velocity(const Spectrum& s, double p_hat, const RadarParams& params,
                    MomentConvention convention = MomentConvention::Paper);

/// Square root of the second central spectral moment in velocity units:
///     w^2 = lambda^2/(4 P Ts^2) * sum (S(k) - N) * (k/(M-1) - 2 v Ts/lambda)^2.
/// The subtraction recenters each bin on the estimated mean so that a
/// point mass gives zero width. Throws DegenerateInput when p_hat <= 0.
double fft_width(const Spectrum& s, double p_hat, double v_hat,
                 const RadarParams& params,
                 MomentConvention convention = MomentConvention::Paper);

/// Density-weighted mean and standard deviation of the bin frequencies of
/// an RftOrder spectrum, scaled to velocity by lambda/2; power is the
/// total density. Throws DegenerateInput on an all-zero spectrum.
DopplerMoments rft_moments(const Spectrum& s, const RadarParams& params);

/// v = (lambda / 2) f
double freq_to_velocity(double f_hz, const RadarParams& params);

/// w = (lambda / 2) sigma_f
double width_scale(double sigma_f_hz, const RadarParams& params);

}  // namespace radmom
