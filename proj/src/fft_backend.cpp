// SPDX-License-Identifier: Apache-2.0
#include "fft_backend.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace radmom::detail {
namespace {

// One FFTW_ESTIMATE | FFTW_UNALIGNED plan per (size, sign), created once.
// Unaligned plans may execute on any buffer via fftw_execute_dft.
fftw_plan plan_for(std::size_t size, int sign) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({size, sign});
    if (it != cache.end()) return it->second;

    fftw_complex* buf = fftw_alloc_complex(size);
    if (buf == nullptr) throw std::bad_alloc();
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(size), buf, buf, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (plan == nullptr) throw std::runtime_error("fftw_plan_dft_1d failed");
    cache.emplace(std::make_pair(size, sign), plan);
    return plan;
}

std::vector<std::complex<double>> run(std::span<const std::complex<double>> x,
                                      std::size_t size, int sign) {
    if (size == 0) throw std::invalid_argument("dft: size must be >= 1");
    if (x.size() > size) throw std::invalid_argument("dft: input longer than transform size");
    std::vector<std::complex<double>> io(size, 0.0);
    std::copy(x.begin(), x.end(), io.begin());
    fftw_plan plan = plan_for(size, sign);
    // std::complex<double> is layout compatible with fftw_complex
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(io.data()),
                     reinterpret_cast<fftw_complex*>(io.data()));
    return io;
}

}  // namespace

std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x,
                                              std::size_t size) {
    return run(x, size, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> x,
                                               std::size_t size) {
    return run(x, size, FFTW_BACKWARD);
}

}  // namespace radmom::detail
