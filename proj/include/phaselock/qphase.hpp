#pragma once

// Finite-dimensional Hilbert-space objects for quantum phase locking.
//
// Phase states are discrete-QFT superpositions of the number states,
//
//     |theta_p> = q^{-1/2} sum_n exp(2*i*pi*p*n/q) |n>,  theta_p = 2*pi*p/q,
//
// and the phase-locked states are those whose index p is coprime to q.
// Matrix layout is entry(n, l) = <n|A|l>, which makes q times a locked
// projector entry the Ramanujan sum c_q(n-l) by construction.

#include <cstdint>

#include "phaselock/types.hpp"

namespace phaselock::qphase {

// Unit-norm amplitudes q^{-1/2} exp(2*i*pi*p*n/q); p must lie in 0..q-1.
Vector phase_state(std::int64_t q, std::int64_t p);

// Unitary q x q matrix whose row p is phase_state(q, p).
Matrix qft_matrix(std::int64_t q);

// Unit-norm amplitudes q^{-1/2} exp(i*n*beta) for a real phase parameter.
Vector pure_phase_state(std::int64_t q, double beta);

// diag(0, 1, ..., q-1).
Matrix number_operator(std::int64_t q);

// Projector onto the span of the phase-locked states, assembled from exact
// integer Ramanujan sums: entry(n, l) = c_q(n-l)/q.  Real, Hermitian,
// idempotent, trace phi(q).
Matrix locked_projector(std::int64_t q);

// pi * locked_projector(q).
Matrix locking_operator_projector_form(std::int64_t q);

// sum over totatives p of theta_p |theta_p><theta_p|.  Hermitian.  Its real
// part equals the projector form for q >= 2 (pair p with q-p); for q >= 3 a
// purely imaginary antisymmetric remainder survives, and at q = 1 the single
// term theta_0 = 0 makes the operator vanish outright.
Matrix locking_operator_spectral(std::int64_t q);

// Same spectral sum over all p = 0..q-1 (coprimality constraint removed).
Matrix pb_phase_operator(std::int64_t q);

Matrix commutator(const Matrix& a, const Matrix& b);

// [pi*P, N] in closed form: entry(n, l) = (pi/q)(l-n) c_q(n-l).  Real and
// antisymmetric, hence anti-Hermitian.
Matrix locked_commutator_closed(std::int64_t q);

}  // namespace phaselock::qphase
