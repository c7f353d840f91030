// SPDX-License-Identifier: Apache-2.0
#include "radmom/estimate.hpp"

#include <algorithm>
#include <stdexcept>

#include "radmom/errors.hpp"

namespace radmom {

std::size_t rft_pipeline_max_order(std::size_t sample_count) {
    return std::max<std::size_t>(1, std::min<std::size_t>(12, sample_count / 2));
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

DopplerMoments estimate_pp(const IqSeries& z) {
    DopplerMoments m;
    m.method = Method::PulsePair;
    m.power = power_estimate(z);
    m.mean_velocity_mps = pp_velocity(z);
    m.width_mps = pp_width(z);
    return m;
}

Spectrum fft_spectrum(const IqSeries& z, const FftOptions& opt) {
    const std::size_t size = opt.fft_size != 0 ? opt.fft_size : next_pow2(z.samples.size());
    return periodogram(z, size, opt.window);
}

DopplerMoments estimate_fft(const IqSeries& z, const FftOptions& opt) {
    const Spectrum s = fft_spectrum(z, opt);
    // noise-corrected spectrum-sum power normalizes the moment sums
    const double p_hat =
        s.total_density() - static_cast<double>(s.bins.size()) * z.params.noise_power;
    if (p_hat <= 0.0) throw DegenerateInput("estimate_fft: no power above the noise floor");
    DopplerMoments m;
    m.method = Method::Fft;
    m.power = power_estimate(z);
    m.mean_velocity_mps = fft_velocity(s, p_hat, z.params, opt.convention);
    m.width_mps = fft_width(s, p_hat, m.mean_velocity_mps, z.params, opt.convention);
    return m;
}

Spectrum rft_spectrum(const IqSeries& z, const RftOptions& opt) {
    if (z.samples.size() < 2) throw std::invalid_argument("rft_spectrum: need at least 2 samples");
    const std::size_t q =
        opt.max_order_q != 0 ? opt.max_order_q : rft_pipeline_max_order(z.samples.size());
    const RftCoefficients coeffs = rft_forward(z.samples, q);
    return rft_power_spectrum(coeffs, z.params);
}

DopplerMoments estimate_rft(const IqSeries& z, const RftOptions& opt) {
    return rft_moments(rft_spectrum(z, opt), z.params);
}

DopplerMoments estimate(const IqSeries& z, Method method, const FftOptions& fft_opt,
                        const RftOptions& rft_opt) {
    switch (method) {
        case Method::PulsePair: return estimate_pp(z);
        case Method::Fft: return estimate_fft(z, fft_opt);
        case Method::Rft: return estimate_rft(z, rft_opt);
    }
    throw std::invalid_argument("estimate: unknown method");
}

}  // namespace radmom
