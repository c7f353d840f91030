// SPDX-License-Identifier: Apache-2.0
#include "radmom/numtheory.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace radmom {

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        f.factors.push_back({d, e});
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) throw std::invalid_argument("gcd: (0, 0) has no greatest common divisor");
    return std::gcd(a, b);
}

int moebius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    const Factorization f = factorize(n);
    for (const auto& pp : f.factors)
        if (pp.exponent > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t totient(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("totient: q must be >= 1");
    std::uint64_t r = q;
    for (const auto& pp : factorize(q).factors) r = r / pp.prime * (pp.prime - 1);
    return r;
}

long long ramanujan_sum(std::uint64_t q, std::uint64_t n) {
    if (q == 0 || n == 0) throw std::invalid_argument("ramanujan_sum: q and n must be >= 1");
    const std::uint64_t d = q / gcd(q, n);
    const int mu = moebius(d);
    if (mu == 0) return 0;
    // phi(d) divides phi(q) whenever d divides q, so this is exact.
    const std::uint64_t ratio = totient(q) / totient(d);
    assert(totient(q) % totient(d) == 0);
    return static_cast<long long>(mu) * static_cast<long long>(ratio);
}

std::complex<double> ramanujan_sum_direct(std::uint64_t q, std::uint64_t n) {
    if (q == 0 || n == 0)
        throw std::invalid_argument("ramanujan_sum_direct: q and n must be >= 1");
    std::complex<double> sum = 0.0;
    for (std::uint64_t p = 1; p <= q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        // exp(2 pi i p n / q); reduce p n mod q first to keep the phase small
        const std::uint64_t r = (p % q) * (n % q) % q;
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q);
        sum += std::polar(1.0, theta);
    }
    return sum;
}

std::vector<long long> ramanujan_period(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("ramanujan_period: q must be >= 1");
    std::vector<long long> period(q);
    for (std::uint64_t n = 1; n <= q; ++n) period[n - 1] = ramanujan_sum(q, n);
    return period;
}

}  // namespace radmom
