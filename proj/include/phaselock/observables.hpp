#pragma once

// Phase statistics of the pure phase state with amplitudes
// q^{-1/2} exp(i*n*beta), restricted to the phase-locked grid.
//
// Every quantity comes in two variants: the definitional sum over totatives
// (weights |<theta_p|f>|^2, kept sub-normalized exactly as written) and the
// Ramanujan-sum closed form.  The two genuinely differ for q >= 3 -- the
// closed form is the projector bilinear form pi*<f|P|f>, while the
// definitional sum picks up the imaginary remainder of the spectral
// operator -- so reports carry both values plus their discrepancy instead
// of preferring one silently.

#include <cstdint>
#include <vector>

namespace phaselock::observables {

struct PhaseWeight {
    std::int64_t p;  // totative index
    double theta;    // 2*pi*p/q
    double weight;   // |<theta_p|f>|^2, nonnegative
};

// Sub-normalized distribution: the coprimality constraint restricts the
// support, so weights sum to at most 1.
struct PhaseDistribution {
    std::int64_t q;
    double beta;
    std::vector<PhaseWeight> entries;  // one per totative, ascending p

    double total_weight() const;
};

PhaseDistribution phase_probabilities(std::int64_t q, double beta);

// sum theta_p * weight_p over totatives; lies in [0, 2*pi).
double expectation_definitional(std::int64_t q, double beta);

// (pi/q^2) sum_{n,l} c_q(l-n) exp(i*beta*(n-l)), reduced to O(q) by the
// diagonal count: m = l-n occurs q-|m| times.  Equals pi*<f|P|f>.
double expectation_closed(std::int64_t q, double beta);

// Same reduction with the weighted sums (p/q)^2 in place of c_q.
double modified_expectation_closed(std::int64_t q, double beta);

// sum (theta_p - M)^2 * weight_p with M = expectation_definitional; the
// sub-normalized weights are used as-is, no renormalization.
double variance_definitional(std::int64_t q, double beta);

// 4*modified_expectation + (E/pi)(E - 2*pi) with E = expectation_closed.
// Reported alongside the definitional variance, never substituted for it.
double variance_closed(std::int64_t q, double beta);

// Exploratory variant with weights rescaled to total 1 before taking
// moments; 0 when the support is numerically empty.  Not part of the
// closed-form family above.
double variance_renormalized(std::int64_t q, double beta);

struct ObservableReport {
    std::int64_t q = 1;
    double beta = 0.0;
    double expectation_def = 0.0;
    double expectation_closed = 0.0;
    double variance_def = 0.0;
    double variance_closed = 0.0;
    double modified_expectation = 0.0;
    double total_weight = 0.0;
    double discrepancy_expectation = 0.0;
    double discrepancy_variance = 0.0;
};

ObservableReport observable_report(std::int64_t q, double beta);

}  // namespace phaselock::observables
