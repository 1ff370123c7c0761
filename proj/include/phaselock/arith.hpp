#pragma once

// Exact integer number theory and Ramanujan-sum machinery.
//
// The Ramanujan sum is the coprimality-restricted exponential sum
//
//     c_q(n) = sum_{p = 1..q, gcd(p,q) = 1} exp(2*i*pi*p*n/q)
//            = mu(r) * phi(q) / phi(r),    r = q / gcd(q, n),
//
// an exact integer because phi(r) divides phi(q) whenever r divides q.
// The closed form is evaluated in integer arithmetic and is the primary
// path; the direct exponential sum is the floating-point cross-check.
// Conventions: gcd(q, 0) = q so that c_q(0) = phi(q); n is reduced mod q
// first, which also gives evenness c_q(-n) = c_q(n).

#include <complex>
#include <cstdint>
#include <vector>

namespace phaselock::arith {

struct PrimePower {
    std::int64_t prime;
    int exponent;
};

// Prime decomposition with strictly increasing primes; n = 1 has no factors.
struct Factorization {
    std::int64_t n = 1;
    std::vector<PrimePower> factors;
};

// gcd of nonnegative integers, gcd(0, b) = b; gcd(0, 0) is a domain error.
std::int64_t gcd(std::int64_t a, std::int64_t b);

// Trial division up to sqrt(n); exact at desk scale.
Factorization factorize(std::int64_t n);

std::int64_t euler_totient(std::int64_t q);

// 0 if n has a squared prime factor, else (-1)^(number of prime factors).
int moebius(std::int64_t n);

// Ascending p in [0, q) with gcd(p, q) = 1; {0} for q = 1.
std::vector<std::int64_t> totatives(std::int64_t q);

std::int64_t ramanujan_sum_closed(std::int64_t q, std::int64_t n);

// c_q(n) for n = 0..q-1, sharing one factorization of q.
std::vector<std::int64_t> ramanujan_sum_table(std::int64_t q);

// Direct sum over totatives; real by the p <-> q-p pairing.
double ramanujan_sum_direct(std::int64_t q, std::int64_t n);

// Weighted variant sum_{p = 1..q, gcd(p,q) = 1} (p/q)^2 exp(2*i*pi*m*p/q).
// Complex in general, conjugate-even in m, periodic with period q.  The
// index range 1..q matters only at q = 1, where the single term is p = 1
// and the value is exactly 1.
std::complex<double> modified_ramanujan_sum(std::int64_t q, std::int64_t m);
std::vector<std::complex<double>> modified_ramanujan_table(std::int64_t q);

// ln p if n = p^k for a prime p, else 0; mangoldt(1) = 0.
double mangoldt(std::int64_t n);

}  // namespace phaselock::arith
