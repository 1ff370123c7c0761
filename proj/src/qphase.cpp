#include "phaselock/qphase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phaselock/arith.hpp"

namespace phaselock::qphase {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

void require_positive_dim(std::int64_t q) {
    if (q < 1) throw std::domain_error("dimension q must be a positive integer");
}

std::int64_t mod_q(std::int64_t x, std::int64_t q) {
    std::int64_t m = x % q;
    return m < 0 ? m + q : m;
}

}  // namespace

Vector phase_state(std::int64_t q, std::int64_t p) {
    require_positive_dim(q);
    if (p < 0 || p >= q) throw std::domain_error("phase index p must lie in 0..q-1");
    Vector v(q);
    const double amp = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::int64_t n = 0; n < q; ++n)
        v[n] = std::polar(amp, kTau * static_cast<double>((p * n) % q) / static_cast<double>(q));
    return v;
}

Matrix qft_matrix(std::int64_t q) {
    require_positive_dim(q);
    Matrix m(q, q);
    const double amp = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::int64_t p = 0; p < q; ++p)
        for (std::int64_t n = 0; n < q; ++n)
            m(p, n) = std::polar(amp, kTau * static_cast<double>((p * n) % q) / static_cast<double>(q));
    return m;
}

Vector pure_phase_state(std::int64_t q, double beta) {
    require_positive_dim(q);
    if (!std::isfinite(beta)) throw std::domain_error("beta must be finite");
    Vector v(q);
    const double amp = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::int64_t n = 0; n < q; ++n) v[n] = std::polar(amp, beta * static_cast<double>(n));
    return v;
}

Matrix number_operator(std::int64_t q) {
    require_positive_dim(q);
    Matrix m = Matrix::Zero(q, q);
    for (std::int64_t n = 0; n < q; ++n) m(n, n) = static_cast<double>(n);
    return m;
}

Matrix locked_projector(std::int64_t q) {
    require_positive_dim(q);
    const auto c = arith::ramanujan_sum_table(q);
    Matrix m(q, q);
    for (std::int64_t n = 0; n < q; ++n)
        for (std::int64_t l = 0; l < q; ++l)
            m(n, l) = static_cast<double>(c[static_cast<std::size_t>(mod_q(n - l, q))]) /
                      static_cast<double>(q);
    return m;
}

Matrix locking_operator_projector_form(std::int64_t q) { return kPi * locked_projector(q); }

Matrix locking_operator_spectral(std::int64_t q) {
    require_positive_dim(q);
    Matrix op = Matrix::Zero(q, q);
    for (const std::int64_t p : arith::totatives(q)) {
        const Vector v = phase_state(q, p);
        op += (kTau * static_cast<double>(p) / static_cast<double>(q)) * (v * v.adjoint());
    }
    return op;
}

Matrix pb_phase_operator(std::int64_t q) {
    require_positive_dim(q);
    Matrix op = Matrix::Zero(q, q);
    for (std::int64_t p = 0; p < q; ++p) {
        const Vector v = phase_state(q, p);
        op += (kTau * static_cast<double>(p) / static_cast<double>(q)) * (v * v.adjoint());
    }
    return op;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::domain_error("commutator requires square matrices of equal dimension");
    return a * b - b * a;
}

Matrix locked_commutator_closed(std::int64_t q) {
    require_positive_dim(q);
    const auto c = arith::ramanujan_sum_table(q);
    Matrix m(q, q);
    for (std::int64_t n = 0; n < q; ++n)
        for (std::int64_t l = 0; l < q; ++l)
            m(n, l) = kPi / static_cast<double>(q) * static_cast<double>(l - n) *
                      static_cast<double>(c[static_cast<std::size_t>(mod_q(n - l, q))]);
    return m;
}

}  // namespace phaselock::qphase
