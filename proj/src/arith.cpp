#include "phaselock/arith.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace phaselock::arith {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

void require_positive(std::int64_t v, const char* what) {
    if (v < 1) throw std::domain_error(std::string(what) + " must be a positive integer");
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw std::domain_error("gcd arguments must be nonnegative");
    if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

Factorization factorize(std::int64_t n) {
    require_positive(n, "n");
    Factorization f;
    f.n = n;
    std::int64_t m = n;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        f.factors.push_back({d, e});
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

std::int64_t euler_totient(std::int64_t q) {
    require_positive(q, "q");
    std::int64_t phi = 1;
    for (const auto& [p, e] : factorize(q).factors) {
        phi *= p - 1;
        for (int k = 1; k < e; ++k) phi *= p;
    }
    return phi;
}

int moebius(std::int64_t n) {
    require_positive(n, "n");
    const auto f = factorize(n);
    for (const auto& pp : f.factors)
        if (pp.exponent >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::int64_t> totatives(std::int64_t q) {
    require_positive(q, "q");
    if (q == 1) return {0};
    std::vector<std::int64_t> out;
    for (std::int64_t p = 1; p < q; ++p)
        if (std::gcd(p, q) == 1) out.push_back(p);
    return out;
}

std::int64_t ramanujan_sum_closed(std::int64_t q, std::int64_t n) {
    require_positive(q, "q");
    std::int64_t m = n % q;
    if (m < 0) m += q;
    const std::int64_t r = q / std::gcd(q, m);  // gcd(q, 0) = q, so c_q(0) = phi(q)
    const int mu = moebius(r);
    if (mu == 0) return 0;
    const std::int64_t phi_q = euler_totient(q);
    const std::int64_t phi_r = euler_totient(r);
    assert(phi_q % phi_r == 0);
    return mu * (phi_q / phi_r);
}

std::vector<std::int64_t> ramanujan_sum_table(std::int64_t q) {
    require_positive(q, "q");
    const auto fq = factorize(q).factors;
    std::int64_t phi_q = 1;
    for (const auto& [p, e] : fq) {
        phi_q *= p - 1;
        for (int k = 1; k < e; ++k) phi_q *= p;
    }
    std::vector<std::int64_t> table(static_cast<std::size_t>(q));
    for (std::int64_t n = 0; n < q; ++n) {
        std::int64_t r = q / std::gcd(q, n);
        // mu(r) and phi(r) from the exponents of q's primes in r
        int mu = 1;
        std::int64_t phi_r = 1;
        for (const auto& [p, e] : fq) {
            int k = 0;
            while (r % p == 0) {
                r /= p;
                ++k;
            }
            if (k >= 2) {
                mu = 0;
                break;
            }
            if (k == 1) {
                mu = -mu;
                phi_r *= p - 1;
            }
        }
        if (mu == 0) {
            table[static_cast<std::size_t>(n)] = 0;
        } else {
            assert(phi_q % phi_r == 0);
            table[static_cast<std::size_t>(n)] = mu * (phi_q / phi_r);
        }
    }
    return table;
}

double ramanujan_sum_direct(std::int64_t q, std::int64_t n) {
    require_positive(q, "q");
    std::int64_t m = n % q;
    if (m < 0) m += q;
    // Imaginary parts cancel pairwise (p with q-p), so sum cosines only.
    double s = 0.0;
    for (std::int64_t p = 1; p <= q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        s += std::cos(kTau * static_cast<double>((p * m) % q) / static_cast<double>(q));
    }
    return s;
}

std::complex<double> modified_ramanujan_sum(std::int64_t q, std::int64_t m) {
    require_positive(q, "q");
    std::int64_t mm = m % q;
    if (mm < 0) mm += q;
    std::complex<double> s = 0.0;
    for (std::int64_t p = 1; p <= q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const double w = static_cast<double>(p) / static_cast<double>(q);
        s += w * w * std::polar(1.0, kTau * static_cast<double>((p * mm) % q) / static_cast<double>(q));
    }
    return s;
}

std::vector<std::complex<double>> modified_ramanujan_table(std::int64_t q) {
    require_positive(q, "q");
    std::vector<std::int64_t> reps;  // index range 1..q, so q = 1 contributes p = 1
    for (std::int64_t p = 1; p <= q; ++p)
        if (std::gcd(p, q) == 1) reps.push_back(p);
    std::vector<std::complex<double>> table(static_cast<std::size_t>(q));
    for (std::int64_t m = 0; m < q; ++m) {
        std::complex<double> s = 0.0;
        for (const std::int64_t p : reps) {
            const double w = static_cast<double>(p) / static_cast<double>(q);
            s += w * w * std::polar(1.0, kTau * static_cast<double>((p * m) % q) / static_cast<double>(q));
        }
        table[static_cast<std::size_t>(m)] = s;
    }
    return table;
}

double mangoldt(std::int64_t n) {
    require_positive(n, "n");
    const auto f = factorize(n);
    if (f.factors.size() != 1) return 0.0;  // includes n = 1
    return std::log(static_cast<double>(f.factors.front().prime));
}

}  // namespace phaselock::arith
