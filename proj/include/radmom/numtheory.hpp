// SPDX-License-Identifier: Apache-2.0
//
// Exact integer arithmetic functions underpinning the Ramanujan sums:
// factorization, gcd, Moebius, Euler totient, and c_q(n). Everything here
// is a pure function; all results are exact integers except the direct
// character sum, which exists as a floating-point cross-check.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace radmom {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with primes in strictly increasing order.
/// The factorization of 1 is the empty product.
struct Factorization {
    std::vector<PrimePower> factors;
};

/// Trial division up to sqrt(n). Rejects n = 0.
Factorization factorize(std::uint64_t n);

/// Greatest common divisor. Rejects (0, 0).
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Moebius function: 1 for n = 1, 0 if n has a squared prime factor,
/// (-1)^k for a product of k distinct primes. Rejects n = 0.
int moebius(std::uint64_t n);

/// Euler totient, computed exactly as (q / prod q_i) * prod (q_i - 1).
/// Rejects q = 0.
std::uint64_t totient(std::uint64_t q);

/// Ramanujan sum c_q(n) via the closed form
///     c_q(n) = mu(q / (q,n)) * phi(q) / phi(q / (q,n)),
/// exact in integer arithmetic. Rejects q = 0 or n = 0.
long long ramanujan_sum(std::uint64_t q, std::uint64_t n);

/// c_q(n) as the direct sum of exp(2*pi*i*p*n/q) over the phi(q)
/// residues p in [1, q] coprime to q. Floating point; serves as the
/// independent oracle for ramanujan_sum.
std::complex<double> ramanujan_sum_direct(std::uint64_t q, std::uint64_t n);

/// One period of c_q: entry k holds c_q(k + 1) for k = 0..q-1.
/// c_q(n) == period[(n - 1) % q] for n >= 1.
std::vector<long long> ramanujan_period(std::uint64_t q);

}  // namespace radmom
