// SPDX-License-Identifier: Apache-2.0
#include "radmom/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft_backend.hpp"
#include "radmom/errors.hpp"

namespace radmom {

namespace {
constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double window_value(WindowKind w, std::size_t i, std::size_t m) {
    switch (w) {
        case WindowKind::Rectangular:
            return 1.0;
        case WindowKind::Hann:
            if (m == 1) return 1.0;
            return 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) /
                                        static_cast<double>(m - 1));
    }
    return 1.0;
}
}  // namespace

void RadarParams::validate() const {
    if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
        throw std::invalid_argument("RadarParams: wavelength_m must be positive");
    if (!(prt_s > 0.0) || !std::isfinite(prt_s))
        throw std::invalid_argument("RadarParams: prt_s must be positive");
    if (noise_power < 0.0 || !std::isfinite(noise_power))
        throw std::invalid_argument("RadarParams: noise_power must be nonnegative");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::PulsePair: return "pp";
        case Method::Fft: return "fft";
        case Method::Rft: return "rft";
    }
    return "?";
}

double Spectrum::total_density() const {
    double sum = 0.0;
    for (const auto& b : bins) sum += b.density;
    return sum;
}

std::complex<double> autocorr_lag1(const IqSeries& z) {
    const auto& s = z.samples;
    if (s.size() < 2) throw std::invalid_argument("autocorr_lag1: need at least 2 samples");
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) sum += std::conj(s[k]) * s[k + 1];
    return sum / static_cast<double>(s.size() - 1);
}

double power_estimate(const IqSeries& z) {
    if (z.samples.empty()) throw std::invalid_argument("power_estimate: empty series");
    double sum = 0.0;
    for (const auto& v : z.samples) sum += std::norm(v);
    const double p = sum / static_cast<double>(z.samples.size()) - z.params.noise_power;
    return std::max(p, 0.0);  // negative power is unphysical
}

double pp_velocity(const IqSeries& z) {
    z.params.validate();
    const std::complex<double> r1 = autocorr_lag1(z);
    if (std::abs(r1) == 0.0)
        throw DegenerateInput("pp_velocity: zero lag-1 autocorrelation, velocity undefined");
    // v = lambda / (4 pi Ts) * arg R(Ts)
    return z.params.wavelength_m / (4.0 * kPi * z.params.prt_s) * std::arg(r1);
}

double pp_width(const IqSeries& z) {
    z.params.validate();
    const double p = power_estimate(z);
    if (p <= 0.0) throw DegenerateInput("pp_width: zero power estimate, width undefined");
    const double r1 = std::abs(autocorr_lag1(z));
    const double bracket = std::clamp(1.0 - r1 / p, 0.0, 1.0);
    const double lam = z.params.wavelength_m;
    const double ts = z.params.prt_s;
    return std::sqrt(lam * lam / (8.0 * kPi * kPi * ts * ts) * bracket);
}

Spectrum periodogram(const IqSeries& z, std::size_t fft_size, WindowKind window) {
    z.params.validate();
    const std::size_t m = z.samples.size();
    if (m == 0) throw std::invalid_argument("periodogram: empty series");
    if (fft_size < m) throw std::invalid_argument("periodogram: fft_size must be >= sample count");
    if (!is_pow2(fft_size)) throw std::invalid_argument("periodogram: fft_size must be a power of two");

    std::vector<std::complex<double>> win(m);
    double wsq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double w = window_value(window, i, m);
        win[i] = z.samples[i] * w;
        wsq += w * w;
    }
    const auto dft = detail::dft_forward(win, fft_size);

    const std::size_t M = fft_size;
    Spectrum s;
    s.kind = SpectrumKind::DftPeriodogram;
    s.bins.resize(M);
    for (std::size_t i = 0; i < M; ++i) {
        // bin i holds k = i - M/2; DFT index k mod M
        const long long k = static_cast<long long>(i) - static_cast<long long>(M / 2);
        const std::size_t idx = static_cast<std::size_t>(k < 0 ? k + static_cast<long long>(M)
                                                                : k);
        s.bins[i].frequency_hz =
            static_cast<double>(k) / (static_cast<double>(M) * z.params.prt_s);
        s.bins[i].density = std::norm(dft[idx]) / wsq;
    }
    return s;
}

namespace {
double convention_norm(std::size_t m_bins, MomentConvention c) {
    return c == MomentConvention::Paper ? static_cast<double>(m_bins - 1)
                                        : static_cast<double>(m_bins);
}
}  // namespace

double fft_velocity(const Spectrum& s, double p_hat, const RadarParams& params,
                    MomentConvention convention) {
    params.validate();
    if (s.kind != SpectrumKind::DftPeriodogram)
        throw std::invalid_argument("fft_velocity: spectrum must be a DFT periodogram");
    if (s.bins.size() < 2) throw std::invalid_argument("fft_velocity: need at least 2 bins");
    if (p_hat <= 0.0) throw DegenerateInput("fft_velocity: nonpositive power");

    const std::size_t M = s.bins.size();
    const double norm = convention_norm(M, convention);
    double sum = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        const double k = static_cast<double>(static_cast<long long>(i) -
                                             static_cast<long long>(M / 2));
        sum += (s.bins[i].density - params.noise_power) * (k / norm);
    }
    return params.wavelength_m / (2.0 * p_hat * params.prt_s) * sum;
}

double fft_width(const Spectrum& s, double p_hat, double v_hat,
                 const RadarParams& params, MomentConvention convention) {
    params.validate();
    if (s.kind != SpectrumKind::DftPeriodogram)
        throw std::invalid_argument("fft_width: spectrum must be a DFT periodogram");
    if (s.bins.size() < 2) throw std::invalid_argument("fft_width: need at least 2 bins");
    if (p_hat <= 0.0) throw DegenerateInput("fft_width: nonpositive power");

    const std::size_t M = s.bins.size();
    const double norm = convention_norm(M, convention);
    const double lam = params.wavelength_m;
    const double ts = params.prt_s;
    const double center = 2.0 * v_hat * ts / lam;  // f-hat * Ts
    double sum = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        const double k = static_cast<double>(static_cast<long long>(i) -
                                             static_cast<long long>(M / 2));
        const double dev = k / norm - center;
        sum += (s.bins[i].density - params.noise_power) * dev * dev;
    }
    const double w2 = lam * lam / (4.0 * p_hat * ts * ts) * sum;
    return std::sqrt(std::max(w2, 0.0));
}

DopplerMoments rft_moments(const Spectrum& s, const RadarParams& params) {
    params.validate();
    if (s.kind != SpectrumKind::RftOrder)
        throw std::invalid_argument("rft_moments: spectrum must be q-indexed");
    const double total = s.total_density();
    if (total <= 0.0) throw DegenerateInput("rft_moments: all-zero spectrum");

    double fbar = 0.0;
    for (const auto& b : s.bins) fbar += b.frequency_hz * b.density;
    fbar /= total;
    double var = 0.0;
    for (const auto& b : s.bins) {
        const double d = b.frequency_hz - fbar;
        var += d * d * b.density;
    }
    var /= total;

    DopplerMoments m;
    m.method = Method::Rft;
    m.power = total;
    m.mean_velocity_mps = freq_to_velocity(fbar, params);
    m.width_mps = width_scale(std::sqrt(std::max(var, 0.0)), params);
    return m;
}

double freq_to_velocity(double f_hz, const RadarParams& params) {
    return params.wavelength_m / 2.0 * f_hz;
}

double width_scale(double sigma_f_hz, const RadarParams& params) {
    return params.wavelength_m / 2.0 * sigma_f_hz;
}

}  // namespace radmom
