// SPDX-License-Identifier: Apache-2.0
#include "radmom/rft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radmom/numtheory.hpp"

namespace radmom {

std::complex<double> mean_value(std::span<const std::complex<double>> x) {
    if (x.empty()) throw std::invalid_argument("mean_value: empty sequence");
    std::complex<double> sum = 0.0;
    for (const auto& v : x) sum += v;
    return sum / static_cast<double>(x.size());
}

RftCoefficients rft_forward(std::span<const std::complex<double>> x,
                            std::size_t max_order_q) {
    if (x.empty()) throw std::invalid_argument("rft_forward: empty sequence");
    if (max_order_q == 0) throw std::invalid_argument("rft_forward: max_order_q must be >= 1");

    const std::size_t t = x.size();
    RftCoefficients out;
    out.max_order_q = max_order_q;
    out.sample_count = t;
    out.coeffs.resize(max_order_q);

    for (std::size_t q = 1; q <= max_order_q; ++q) {
        const std::vector<long long> period = ramanujan_period(q);
        std::complex<double> sum = 0.0;
        for (std::size_t i = 0; i < t; ++i) {
            // sample i holds x(n) with n = i + 1
            sum += x[i] * static_cast<double>(period[i % q]);
        }
        const double phi = static_cast<double>(totient(q));
        out.coeffs[q - 1] = sum / (phi * static_cast<double>(t));
    }
    return out;
}

std::vector<std::complex<double>> rft_inverse(const RftCoefficients& coeffs,
                                              std::size_t length) {
    if (length == 0) throw std::invalid_argument("rft_inverse: length must be >= 1");
    std::vector<std::complex<double>> x(length, 0.0);
    for (std::size_t q = 1; q <= coeffs.max_order_q; ++q) {
        const std::vector<long long> period = ramanujan_period(q);
        const std::complex<double> xq = coeffs.coeffs[q - 1];
        for (std::size_t i = 0; i < length; ++i)
            x[i] += xq * static_cast<double>(period[i % q]);
    }
    return x;
}

double divisor_sum_expansion(std::uint64_t n, std::size_t max_order_q) {
    if (n == 0) throw std::invalid_argument("divisor_sum_expansion: n must be >= 1");
    if (max_order_q == 0)
        throw std::invalid_argument("divisor_sum_expansion: max_order_q must be >= 1");
    double sum = 0.0;
    for (std::size_t q = 1; q <= max_order_q; ++q) {
        const double cq = static_cast<double>(ramanujan_sum(q, n));
        sum += cq / (static_cast<double>(q) * static_cast<double>(q));
    }
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return pi2 * static_cast<double>(n) / 6.0 * sum;
}

Spectrum rft_power_spectrum(const RftCoefficients& coeffs, const RadarParams& params) {
    params.validate();
    Spectrum s;
    s.kind = SpectrumKind::RftOrder;
    s.bins.reserve(coeffs.max_order_q);
    for (std::size_t q = 1; q <= coeffs.max_order_q; ++q) {
        const double phi = static_cast<double>(totient(q));
        const double density = phi * std::norm(coeffs.coeffs[q - 1]);
        const double fq = 1.0 / (static_cast<double>(q) * params.prt_s);
        s.bins.push_back({fq, density});
    }
    return s;
}

std::size_t rft_default_max_order(std::size_t sample_count) {
    return std::max<std::size_t>(1, std::min<std::size_t>(64, sample_count / 2));
}

}  // namespace radmom
