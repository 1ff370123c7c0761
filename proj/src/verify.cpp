#include "phaselock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <sstream>

#include "phaselock/arith.hpp"
#include "phaselock/lattice.hpp"
#include "phaselock/observables.hpp"
#include "phaselock/qphase.hpp"
#include "phaselock/types.hpp"

namespace phaselock::verify {

namespace {

constexpr double kPi = std::numbers::pi;

double inf_norm(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

std::int64_t mod_q(std::int64_t x, std::int64_t q) {
    std::int64_t m = x % q;
    return m < 0 ? m + q : m;
}

std::string fmt(double x) {
    std::ostringstream oss;
    oss.precision(3);
    oss << std::scientific << x;
    return oss.str();
}

const std::vector<double> kBetaGrid{0.0, 0.5, 1.0, std::numbers::pi};

CheckResult check_ramanujan_closed_vs_direct(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "ramanujan closed form vs direct sum";
    const std::int64_t lo = std::max<std::int64_t>(1, opt.q_min);
    for (std::int64_t q = lo; q <= opt.q_max_arith; ++q) {
        for (std::int64_t n = 0; n < q; ++n) {
            std::int64_t closed = arith::ramanujan_sum_closed(q, n);
            if (opt.inject_fault && q == lo && n == 0) closed += 1;
            r.max_deviation =
                std::max(r.max_deviation, std::abs(static_cast<double>(closed) - arith::ramanujan_sum_direct(q, n)));
        }
        // negative arguments reduce mod q
        for (const std::int64_t n : {std::int64_t{-1}, std::int64_t{-7}, -q + 1}) {
            const double dev = std::abs(static_cast<double>(arith::ramanujan_sum_closed(q, n)) -
                                        arith::ramanujan_sum_direct(q, n));
            r.max_deviation = std::max(r.max_deviation, dev);
        }
    }
    r.pass = r.max_deviation < 1e-6;
    return r;
}

CheckResult check_ramanujan_structure(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "ramanujan sum integer structure";
    std::int64_t worst = 0;
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= opt.q_max_arith; ++q) {
        const std::int64_t phi = arith::euler_totient(q);
        worst = std::max(worst, std::abs(arith::ramanujan_sum_closed(q, 0) - phi));
        std::int64_t sum = 0;
        for (std::int64_t n = 0; n < q; ++n) {
            const std::int64_t c = arith::ramanujan_sum_closed(q, n);
            sum += c;
            if (std::abs(c) > phi) worst = std::max(worst, std::abs(c) - phi);
            worst = std::max(worst, std::abs(c - arith::ramanujan_sum_closed(q, -n)));
            worst = std::max(worst, std::abs(c - arith::ramanujan_sum_closed(q, n + 3 * q)));
        }
        if (q >= 2) worst = std::max(worst, std::abs(sum));  // full-period cancellation
    }
    r.max_deviation = static_cast<double>(worst);
    r.pass = worst == 0;
    return r;
}

CheckResult check_multiplicativity(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "totient and moebius multiplicativity";
    std::int64_t worst = 0;
    for (std::int64_t a = 1; a <= 60; ++a) {
        for (std::int64_t b = 1; b <= 60; ++b) {
            if (std::gcd(a, b) != 1) continue;
            worst = std::max(worst, std::abs(arith::euler_totient(a * b) -
                                             arith::euler_totient(a) * arith::euler_totient(b)));
            worst = std::max(worst, static_cast<std::int64_t>(std::abs(
                                        arith::moebius(a * b) - arith::moebius(a) * arith::moebius(b))));
        }
    }
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= opt.q_max_arith; ++q)
        worst = std::max(worst, std::abs(static_cast<std::int64_t>(arith::totatives(q).size()) -
                                         arith::euler_totient(q)));
    r.max_deviation = static_cast<double>(worst);
    r.pass = worst == 0;
    return r;
}

CheckResult check_modified_ramanujan_structure(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "modified ramanujan sum structure";
    const std::int64_t hi = std::min<std::int64_t>(opt.q_max_arith, 200);
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= hi; ++q) {
        // m = 0 value is real and equals sum (p/q)^2 over the index range 1..q
        double expected = 0.0;
        for (std::int64_t p = 1; p <= q; ++p)
            if (std::gcd(p, q) == 1)
                expected += static_cast<double>(p * p) / static_cast<double>(q * q);
        const auto at_zero = arith::modified_ramanujan_sum(q, 0);
        r.max_deviation = std::max(r.max_deviation, std::abs(at_zero.imag()));
        r.max_deviation = std::max(r.max_deviation, std::abs(at_zero.real() - expected));
        for (const std::int64_t m : {std::int64_t{1}, std::int64_t{2}, q / 2, q - 1}) {
            const auto plus = arith::modified_ramanujan_sum(q, m);
            r.max_deviation =
                std::max(r.max_deviation, std::abs(arith::modified_ramanujan_sum(q, -m) - std::conj(plus)));
            r.max_deviation =
                std::max(r.max_deviation, std::abs(arith::modified_ramanujan_sum(q, m + q) - plus));
        }
    }
    r.pass = r.max_deviation < 1e-9;
    return r;
}

CheckResult check_qft_unitarity_completeness(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "qft unitarity, orthonormality, completeness";
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= opt.q_max_operators; ++q) {
        const Matrix f = qphase::qft_matrix(q);
        const Matrix id = Matrix::Identity(q, q);
        r.max_deviation = std::max(r.max_deviation, inf_norm(f.adjoint() * f - id));
        r.max_deviation = std::max(r.max_deviation, inf_norm(f * f.adjoint() - id));
        Matrix completeness = Matrix::Zero(q, q);
        for (std::int64_t p = 0; p < q; ++p) {
            const Vector v = qphase::phase_state(q, p);
            completeness += v * v.adjoint();
        }
        r.max_deviation = std::max(r.max_deviation, inf_norm(completeness - id));
        // inverse QFT sends |theta_p> back to the number state |p>
        for (const std::int64_t p : {std::int64_t{0}, q / 2, q - 1}) {
            Vector recovered = f.adjoint() * qphase::phase_state(q, p);
            recovered(p) -= 1.0;
            r.max_deviation = std::max(r.max_deviation, recovered.cwiseAbs().maxCoeff());
        }
    }
    r.pass = r.max_deviation < 1e-9;
    return r;
}

CheckResult check_projector_algebra(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "locked projector algebra";
    bool structure_ok = true;
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= opt.q_max_operators; ++q) {
        const Matrix p = qphase::locked_projector(q);
        const std::int64_t phi = arith::euler_totient(q);
        r.max_deviation = std::max(r.max_deviation, inf_norm(p * p - p));
        if (inf_norm(p - p.adjoint()) != 0.0) structure_ok = false;  // symmetric by table evenness
        r.max_deviation =
            std::max(r.max_deviation, std::abs(p.trace() - Complex(static_cast<double>(phi), 0.0)));
        Eigen::SelfAdjointEigenSolver<Matrix> es(p);
        std::int64_t ones = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double ev = es.eigenvalues()[i];
            if (std::abs(ev - 1.0) <= 1e-7)
                ++ones;
            else if (std::abs(ev) > 1e-7)
                structure_ok = false;
        }
        if (ones != phi) structure_ok = false;
    }
    r.pass = structure_ok && r.max_deviation < 1e-9;
    if (!structure_ok) r.detail = "hermiticity or {0, 1} spectrum with phi(q) ones violated";
    return r;
}

CheckResult check_commutator_identity(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "locked commutator closed form vs matrix product";
    bool structure_ok = true;
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= opt.q_max_operators; ++q) {
        const Matrix closed = qphase::locked_commutator_closed(q);
        const Matrix product =
            qphase::commutator(qphase::locking_operator_projector_form(q), qphase::number_operator(q));
        r.max_deviation = std::max(r.max_deviation, inf_norm(closed - product));
        if (closed.imag().cwiseAbs().maxCoeff() != 0.0) structure_ok = false;
        if (inf_norm(closed + closed.transpose()) != 0.0) structure_ok = false;
    }
    r.pass = structure_ok && r.max_deviation < 1e-9;
    if (!structure_ok) r.detail = "entries not exactly real antisymmetric";
    return r;
}

CheckResult check_spectral_vs_projector(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "spectral operator vs pi * projector";
    double max_imag = 0.0;
    std::ostringstream detail;
    for (std::int64_t q = std::max<std::int64_t>(2, opt.q_min); q <= opt.q_max_operators; ++q) {
        const Matrix s = qphase::locking_operator_spectral(q);
        const Matrix pf = qphase::locking_operator_projector_form(q);
        r.max_deviation = std::max(r.max_deviation, (s.real() - pf.real()).cwiseAbs().maxCoeff());
        max_imag = std::max(max_imag, s.imag().cwiseAbs().maxCoeff());
        r.max_deviation = std::max(r.max_deviation, inf_norm(s - s.adjoint()));
        if (q == 2 && inf_norm(s - pf) > 1e-12) r.pass = false;  // imaginary part first appears at q = 3
    }
    r.pass = r.pass && r.max_deviation < 1e-9;
    detail << "max imaginary residual " << fmt(max_imag);
    if (opt.q_min <= 1 && opt.q_max_operators >= 1) {
        // q = 1 convention: the single term has theta_0 = 0, so the spectral
        // operator vanishes while pi*P = [[pi]]; the residual pi is reported,
        // the real-part identity is asserted for q >= 2 only.
        const Matrix s1 = qphase::locking_operator_spectral(1);
        const Matrix p1 = qphase::locking_operator_projector_form(1);
        if (std::abs(s1(0, 0)) != 0.0 || std::abs(p1(0, 0) - Complex(kPi, 0.0)) != 0.0) r.pass = false;
        detail << "; q = 1 residual " << fmt(inf_norm(s1 - p1)) << " (theta_0 = 0 convention, not asserted)";
    }
    r.detail = detail.str();
    return r;
}

CheckResult check_pb_operator(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "pegg-barnett operator structure";
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= opt.q_max_operators; ++q) {
        const Matrix pb = qphase::pb_phase_operator(q);
        r.max_deviation = std::max(r.max_deviation, inf_norm(pb - pb.adjoint()));
        // diagonal entries all equal pi*(q-1)/q
        const double want = kPi * static_cast<double>(q - 1) / static_cast<double>(q);
        for (std::int64_t n = 0; n < q; ++n)
            r.max_deviation = std::max(r.max_deviation, std::abs(pb(n, n) - Complex(want, 0.0)));
    }
    r.pass = r.max_deviation < 1e-9;
    return r;
}

CheckResult check_expectation_bilinear(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "closed expectation vs projector bilinear form";
    const std::int64_t hi = std::min<std::int64_t>(opt.q_max_operators, 64);
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= hi; ++q) {
        const Matrix p = qphase::locked_projector(q);
        for (const double beta : kBetaGrid) {
            const Vector f = qphase::pure_phase_state(q, beta);
            const double bilinear = kPi * (f.adjoint() * p * f)(0, 0).real();
            r.max_deviation =
                std::max(r.max_deviation, std::abs(observables::expectation_closed(q, beta) - bilinear));
        }
    }
    r.pass = r.max_deviation < 1e-12;
    return r;
}

CheckResult check_diagonal_reduction(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "diagonal-count reduction vs double sum";
    double max_imag = 0.0;
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= opt.q_max_observables; ++q) {
        for (const double beta : kBetaGrid) {
            const auto ds = expectation_double_sum(q, beta);
            r.max_deviation =
                std::max(r.max_deviation, std::abs(observables::expectation_closed(q, beta) - ds.real()));
            max_imag = std::max(max_imag, std::abs(ds.imag()));
            const auto mds = modified_expectation_double_sum(q, beta);
            r.max_deviation = std::max(
                r.max_deviation, std::abs(observables::modified_expectation_closed(q, beta) - mds.real()));
            max_imag = std::max(max_imag, std::abs(mds.imag()));
        }
    }
    r.pass = r.max_deviation < 1e-9 && max_imag < 1e-9;
    r.detail = "double-sum imaginary part " + fmt(max_imag);
    return r;
}

CheckResult check_observable_ranges(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "observable ranges and degeneracies";
    const std::int64_t hi = std::min<std::int64_t>(opt.q_max_observables, 100);
    bool ranges_ok = true;
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= hi; ++q) {
        for (const double beta : {0.0, 0.5, 1.0, 2.0, std::numbers::pi, 5.5}) {
            const auto rep = observables::observable_report(q, beta);
            if (!(rep.expectation_def >= 0.0 && rep.expectation_def < 2.0 * kPi)) ranges_ok = false;
            if (!(rep.variance_def >= 0.0)) ranges_ok = false;
            if (!(rep.total_weight <= 1.0 + 1e-9)) ranges_ok = false;
        }
        if (q >= 2) {
            r.max_deviation = std::max(r.max_deviation, std::abs(observables::expectation_definitional(q, 0.0)));
            r.max_deviation = std::max(r.max_deviation, std::abs(observables::expectation_closed(q, 0.0)));
        }
    }
    if (opt.q_min <= 2 && hi >= 2) {
        // at q = 2 the spectral and projector operators coincide, so the two
        // expectation variants must agree for every beta
        for (const double beta : {0.0, 0.3, 1.0, 2.5, std::numbers::pi, 6.0})
            r.max_deviation =
                std::max(r.max_deviation, std::abs(observables::expectation_definitional(2, beta) -
                                                   observables::expectation_closed(2, beta)));
    }
    r.pass = ranges_ok && r.max_deviation < 1e-9;
    if (!ranges_ok) r.detail = "range constraint violated";
    return r;
}

CheckResult check_variance_below_classical(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "variance at beta = pi below the uniform-phase level pi^2/3";
    const double classical = kPi * kPi / 3.0;
    const std::int64_t lo = std::max<std::int64_t>(4, opt.q_min);
    const std::int64_t hi = std::min<std::int64_t>(opt.q_max_observables, 100);
    std::int64_t below = 0, total = 0;
    double max_variance = 0.0;
    std::vector<std::int64_t> exceptions;
    for (std::int64_t q = lo; q <= hi; ++q) {
        ++total;
        const double v = observables::variance_definitional(q, kPi);
        max_variance = std::max(max_variance, v);
        r.max_deviation = std::max(r.max_deviation, std::max(0.0, v - classical));  // exceedance
        if (v < classical)
            ++below;
        else
            exceptions.push_back(q);
    }
    std::ostringstream detail;
    if (total == 0) {
        detail << "range empty, nothing to check";
    } else {
        detail << below << "/" << total << " below " << fmt(classical) << " (>= 90% required), max variance "
               << fmt(max_variance) << "; exceptions: ";
        if (exceptions.empty()) {
            detail << "none";
        } else {
            for (std::size_t i = 0; i < exceptions.size(); ++i) detail << (i ? ", " : "") << exceptions[i];
        }
    }
    r.detail = detail.str();
    r.pass = 10 * below >= 9 * total;
    return r;
}

CheckResult check_lattice_gram(const VerifyOptions& opt) {
    CheckResult r;
    r.name = "cyclotomic gram matrix vs ramanujan sums";
    double min_eig = 0.0;
    for (std::int64_t q = std::max<std::int64_t>(1, opt.q_min); q <= opt.q_max_lattice; ++q) {
        const auto check = lattice::verify_gram_ramanujan(q);
        r.max_deviation = std::max(r.max_deviation, check.max_deviation);
        if (!check.pass) r.pass = false;
        const Matrix h = lattice::gram_matrix(lattice::generator_matrix(q));
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
        for (Eigen::Index n = 0; n < h.rows(); ++n)
            for (Eigen::Index l = 0; l < h.cols(); ++l)
                r.max_deviation =
                    std::max(r.max_deviation, std::abs(h(n, l).real() - std::round(h(n, l).real())));
    }
    if (min_eig < -1e-7) {
        r.pass = false;
        r.detail = "gram matrix not positive semidefinite, min eigenvalue " + fmt(min_eig);
    }
    r.pass = r.pass && r.max_deviation < 1e-9;
    return r;
}

}  // namespace

std::complex<double> expectation_double_sum(std::int64_t q, double beta) {
    const auto c = arith::ramanujan_sum_table(q);
    std::complex<double> s = 0.0;
    for (std::int64_t n = 0; n < q; ++n)
        for (std::int64_t l = 0; l < q; ++l)
            s += static_cast<double>(c[static_cast<std::size_t>(mod_q(l - n, q))]) *
                 std::polar(1.0, beta * static_cast<double>(n - l));
    return kPi / (static_cast<double>(q) * static_cast<double>(q)) * s;
}

std::complex<double> modified_expectation_double_sum(std::int64_t q, double beta) {
    const auto ct = arith::modified_ramanujan_table(q);
    std::complex<double> s = 0.0;
    for (std::int64_t n = 0; n < q; ++n)
        for (std::int64_t l = 0; l < q; ++l)
            s += ct[static_cast<std::size_t>(mod_q(l - n, q))] *
                 std::polar(1.0, beta * static_cast<double>(n - l));
    return kPi / (static_cast<double>(q) * static_cast<double>(q)) * s;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    std::vector<CheckResult> results;
    results.push_back(check_ramanujan_closed_vs_direct(opt));
    results.push_back(check_ramanujan_structure(opt));
    results.push_back(check_multiplicativity(opt));
    results.push_back(check_modified_ramanujan_structure(opt));
    results.push_back(check_qft_unitarity_completeness(opt));
    results.push_back(check_projector_algebra(opt));
    results.push_back(check_commutator_identity(opt));
    results.push_back(check_spectral_vs_projector(opt));
    results.push_back(check_pb_operator(opt));
    results.push_back(check_expectation_bilinear(opt));
    results.push_back(check_diagonal_reduction(opt));
    results.push_back(check_observable_ranges(opt));
    results.push_back(check_variance_below_classical(opt));
    results.push_back(check_lattice_gram(opt));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": max deviation " << fmt(r.max_deviation);
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << '\n';
        if (r.pass) ++passed;
    }
    out << "verification: " << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace phaselock::verify
