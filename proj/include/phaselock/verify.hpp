#pragma once

// Self-verification suite: re-derives every module's invariants over
// configurable ranges and reports per-check pass/fail with the worst
// observed deviation.  Cross-checks always pit two independent routes
// against each other (closed form vs direct sum, closed commutator vs
// matrix product, diagonal-count reduction vs brute-force double sum).

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace phaselock::verify {

struct CheckResult {
    std::string name;
    bool pass = true;
    double max_deviation = 0.0;
    std::string detail;
};

struct VerifyOptions {
    std::int64_t q_min = 1;
    std::int64_t q_max_operators = 64;     // QFT, projector, commutator, spectral
    std::int64_t q_max_arith = 200;        // Ramanujan closed vs direct
    std::int64_t q_max_lattice = 100;      // Gram identity
    std::int64_t q_max_observables = 200;  // diagonal-count reduction vs double sum

    // Negative control: corrupt one closed Ramanujan value so the
    // closed-vs-direct check must fail.  Proves the comparator has teeth.
    bool inject_fault = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);
void print_report(std::ostream& out, const std::vector<CheckResult>& results);

// Brute-force O(q^2) double sums (pi/q^2) sum_{n,l} w(l-n) exp(i*beta*(n-l))
// with w = c_q and w = modified c_q respectively.  Oracle route only; kept
// independent of the O(q) reductions they are compared against.
std::complex<double> expectation_double_sum(std::int64_t q, double beta);
std::complex<double> modified_expectation_double_sum(std::int64_t q, double beta);

}  // namespace phaselock::verify
