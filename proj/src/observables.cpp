#include "phaselock/observables.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "phaselock/arith.hpp"

namespace phaselock::observables {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

void require_args(std::int64_t q, double beta) {
    if (q < 1) throw std::domain_error("dimension q must be a positive integer");
    if (!std::isfinite(beta)) throw std::domain_error("beta must be finite");
}

// Compensated accumulation keeps the 1e-9 closed-form tolerances honest
// once the term count grows past ~10^3.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double expectation_of(const PhaseDistribution& dist) {
    KahanSum s;
    for (const auto& e : dist.entries) s.add(e.theta * e.weight);
    return s.sum;
}

double variance_of(const PhaseDistribution& dist) {
    const double mean = expectation_of(dist);
    KahanSum s;
    for (const auto& e : dist.entries) s.add((e.theta - mean) * (e.theta - mean) * e.weight);
    return s.sum;
}

double expectation_closed_from(const std::vector<std::int64_t>& c, std::int64_t q, double beta) {
    KahanSum s;
    s.add(static_cast<double>(q) * static_cast<double>(c[0]));
    for (std::int64_t m = 1; m < q; ++m)
        s.add(2.0 * static_cast<double>(q - m) * static_cast<double>(c[static_cast<std::size_t>(m)]) *
              std::cos(beta * static_cast<double>(m)));
    return kPi / (static_cast<double>(q) * static_cast<double>(q)) * s.sum;
}

double modified_expectation_closed_from(const std::vector<std::complex<double>>& ct, std::int64_t q,
                                        double beta) {
    KahanSum s;
    s.add(static_cast<double>(q) * ct[0].real());
    for (std::int64_t m = 1; m < q; ++m) {
        // conjugate-even pairing of m with -m leaves twice the real part
        const std::complex<double> term =
            ct[static_cast<std::size_t>(m)] * std::polar(1.0, -beta * static_cast<double>(m));
        s.add(2.0 * static_cast<double>(q - m) * term.real());
    }
    return kPi / (static_cast<double>(q) * static_cast<double>(q)) * s.sum;
}

double variance_closed_from(double expectation, double modified_expectation) {
    return 4.0 * modified_expectation + expectation / kPi * (expectation - 2.0 * kPi);
}

}  // namespace

double PhaseDistribution::total_weight() const {
    KahanSum s;
    for (const auto& e : entries) s.add(e.weight);
    return s.sum;
}

PhaseDistribution phase_probabilities(std::int64_t q, double beta) {
    require_args(q, beta);
    PhaseDistribution dist{q, beta, {}};
    const auto tot = arith::totatives(q);
    dist.entries.reserve(tot.size());
    for (const std::int64_t p : tot) {
        const double theta = kTau * static_cast<double>(p) / static_cast<double>(q);
        // <theta_p|f> = (1/q) sum_n exp(i*n*(beta - theta_p))
        const double delta = beta - theta;
        std::complex<double> overlap = 0.0;
        for (std::int64_t n = 0; n < q; ++n) overlap += std::polar(1.0, delta * static_cast<double>(n));
        overlap /= static_cast<double>(q);
        dist.entries.push_back({p, theta, std::norm(overlap)});
    }
    return dist;
}

double expectation_definitional(std::int64_t q, double beta) {
    return expectation_of(phase_probabilities(q, beta));
}

double expectation_closed(std::int64_t q, double beta) {
    require_args(q, beta);
    return expectation_closed_from(arith::ramanujan_sum_table(q), q, beta);
}

double modified_expectation_closed(std::int64_t q, double beta) {
    require_args(q, beta);
    return modified_expectation_closed_from(arith::modified_ramanujan_table(q), q, beta);
}

double variance_definitional(std::int64_t q, double beta) {
    return variance_of(phase_probabilities(q, beta));
}

double variance_closed(std::int64_t q, double beta) {
    return variance_closed_from(expectation_closed(q, beta), modified_expectation_closed(q, beta));
}

double variance_renormalized(std::int64_t q, double beta) {
    const auto dist = phase_probabilities(q, beta);
    const double total = dist.total_weight();
    if (total < 1e-15) return 0.0;
    double mean = 0.0;
    for (const auto& e : dist.entries) mean += e.theta * e.weight;
    mean /= total;
    double var = 0.0;
    for (const auto& e : dist.entries) var += (e.theta - mean) * (e.theta - mean) * e.weight;
    return var / total;
}

ObservableReport observable_report(std::int64_t q, double beta) {
    const auto dist = phase_probabilities(q, beta);
    // one table of each kind serves the closed expectation, the weighted
    // expectation and the closed variance
    const auto c = arith::ramanujan_sum_table(q);
    const auto ct = arith::modified_ramanujan_table(q);
    ObservableReport r;
    r.q = q;
    r.beta = beta;
    r.expectation_def = expectation_of(dist);
    r.variance_def = variance_of(dist);
    r.expectation_closed = expectation_closed_from(c, q, beta);
    r.modified_expectation = modified_expectation_closed_from(ct, q, beta);
    r.variance_closed = variance_closed_from(r.expectation_closed, r.modified_expectation);
    r.total_weight = dist.total_weight();
    r.discrepancy_expectation = std::abs(r.expectation_def - r.expectation_closed);
    r.discrepancy_variance = std::abs(r.variance_def - r.variance_closed);
    return r;
}

}  // namespace phaselock::observables
