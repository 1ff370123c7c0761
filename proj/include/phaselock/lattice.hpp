#pragma once

// Cyclotomic lattice generated by the phase-locked characters.  Generator
// rows are indexed by totatives p (ascending), columns by n = 0..phi(q)-1,
// entries exp(2*i*pi*p*n/q).  Rows are deliberately unnormalized so that
// the Gram matrix H = M^dagger M has exact Ramanujan-sum entries
// h(n, l) = c_q(n-l); the unitary QFT normalization q^{-1/2} would scale
// that identity away.

#include <cstdint>

#include "phaselock/types.hpp"

namespace phaselock::lattice {

struct LatticeBasis {
    std::int64_t q;
    std::int64_t dim;  // phi(q)
    Matrix generator;  // dim x dim, first column all ones
};

LatticeBasis generator_matrix(std::int64_t q);

// H = M^dagger M; Hermitian positive semidefinite with real integer entries.
Matrix gram_matrix(const LatticeBasis& basis);

struct GramCheck {
    bool pass;
    double max_deviation;
};

// Entrywise comparison of the Gram matrix with c_q(n-l).
GramCheck verify_gram_ramanujan(std::int64_t q, double tolerance = 1e-9);

}  // namespace phaselock::lattice
