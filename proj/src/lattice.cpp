#include "phaselock/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phaselock/arith.hpp"

namespace phaselock::lattice {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

}  // namespace

LatticeBasis generator_matrix(std::int64_t q) {
    if (q < 1) throw std::domain_error("dimension q must be a positive integer");
    const auto tot = arith::totatives(q);
    const auto dim = static_cast<std::int64_t>(tot.size());
    Matrix m(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t n = 0; n < dim; ++n)
            m(i, n) = std::polar(1.0, kTau * static_cast<double>((tot[static_cast<std::size_t>(i)] * n) % q) /
                                          static_cast<double>(q));
    return {q, dim, std::move(m)};
}

Matrix gram_matrix(const LatticeBasis& basis) {
    if (basis.generator.rows() != basis.dim || basis.generator.cols() != basis.dim)
        throw std::domain_error("lattice basis generator must be dim x dim");
    return basis.generator.adjoint() * basis.generator;
}

GramCheck verify_gram_ramanujan(std::int64_t q, double tolerance) {
    if (q < 1) throw std::domain_error("dimension q must be a positive integer");
    const auto basis = generator_matrix(q);
    const Matrix h = gram_matrix(basis);
    const auto c = arith::ramanujan_sum_table(q);
    double dev = 0.0;
    for (std::int64_t n = 0; n < basis.dim; ++n) {
        for (std::int64_t l = 0; l < basis.dim; ++l) {
            std::int64_t d = (n - l) % q;
            if (d < 0) d += q;
            const Complex expected(static_cast<double>(c[static_cast<std::size_t>(d)]), 0.0);
            dev = std::max(dev, std::abs(h(n, l) - expected));
        }
    }
    return {dev <= tolerance, dev};
}

}  // namespace phaselock::lattice
