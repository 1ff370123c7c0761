#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "phaselock/arith.hpp"
#include "phaselock/observables.hpp"
#include "phaselock/qphase.hpp"

using namespace phaselock;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

// brute-force O(q^2) oracle for the closed forms, assembled here from
// scratch so it shares nothing with the O(q) reductions under test
double expectation_oracle(std::int64_t q, double beta) {
    std::complex<double> s = 0.0;
    for (std::int64_t n = 0; n < q; ++n)
        for (std::int64_t l = 0; l < q; ++l)
            s += static_cast<double>(arith::ramanujan_sum_closed(q, l - n)) *
                 std::exp(std::complex<double>(0.0, beta * static_cast<double>(n - l)));
    REQUIRE(std::abs(s.imag()) < 1e-9);
    return kPi / static_cast<double>(q * q) * s.real();
}

double modified_expectation_oracle(std::int64_t q, double beta) {
    std::complex<double> s = 0.0;
    for (std::int64_t n = 0; n < q; ++n)
        for (std::int64_t l = 0; l < q; ++l)
            s += arith::modified_ramanujan_sum(q, l - n) *
                 std::exp(std::complex<double>(0.0, beta * static_cast<double>(n - l)));
    REQUIRE(std::abs(s.imag()) < 1e-9);
    return kPi / static_cast<double>(q * q) * s.real();
}

}  // namespace

TEST_CASE("phase probability distribution") {
    // beta = pi at q = 2: |f> coincides with the p = 1 phase-locked state
    const auto d2pi = observables::phase_probabilities(2, kPi);
    REQUIRE(d2pi.entries.size() == 1);
    CHECK(d2pi.entries[0].p == 1);
    CHECK_THAT(d2pi.entries[0].weight, WithinAbs(1.0, 1e-12));

    // beta = 0 at q = 2: |f> = |theta_0>, orthogonal to the locked state
    const auto d20 = observables::phase_probabilities(2, 0.0);
    REQUIRE(d20.entries.size() == 1);
    CHECK_THAT(d20.entries[0].weight, WithinAbs(0.0, 1e-12));

    // q = 1 is one-dimensional, all probability on p = 0
    const auto d1 = observables::phase_probabilities(1, 1.234);
    REQUIRE(d1.entries.size() == 1);
    CHECK(d1.entries[0].p == 0);
    CHECK_THAT(d1.entries[0].weight, WithinAbs(1.0, 1e-12));

    for (const std::int64_t q : {1, 2, 3, 12, 36, 97}) {
        for (const double beta : {0.0, 0.5, 1.0, kPi, 5.8}) {
            const auto dist = observables::phase_probabilities(q, beta);
            CHECK(static_cast<std::int64_t>(dist.entries.size()) == arith::euler_totient(q));
            for (const auto& e : dist.entries) {
                CHECK(e.weight >= 0.0);
                CHECK_THAT(e.theta, WithinAbs(2.0 * kPi * static_cast<double>(e.p) / static_cast<double>(q), 1e-12));
            }
            CHECK(dist.total_weight() <= 1.0 + 1e-9);
        }
    }
    CHECK_THROWS_AS(observables::phase_probabilities(0, 1.0), std::domain_error);
}

TEST_CASE("definitional expectation") {
    CHECK_THAT(observables::expectation_definitional(2, kPi), WithinAbs(kPi, 1e-12));
    for (std::int64_t q = 2; q <= 100; ++q)
        CHECK_THAT(observables::expectation_definitional(q, 0.0), WithinAbs(0.0, 1e-9));
    CHECK(observables::expectation_definitional(1, 2.6) == 0.0);  // theta_0 = 0

    for (const std::int64_t q : {2, 7, 24}) {
        for (const double beta : {0.1, 1.0, 3.0, 6.0}) {
            const double e = observables::expectation_definitional(q, beta);
            CHECK(e >= 0.0);
            CHECK(e < 2.0 * kPi);
        }
    }
}

TEST_CASE("closed expectation examples and frozen values") {
    CHECK_THAT(observables::expectation_closed(2, kPi), WithinAbs(kPi, 1e-12));
    for (std::int64_t q = 2; q <= 100; ++q)
        CHECK_THAT(observables::expectation_closed(q, 0.0), WithinAbs(0.0, 1e-9));
    CHECK_THAT(observables::expectation_closed(1, 0.0), WithinAbs(kPi, 1e-12));

    // oracle-derived reference points
    CHECK_THAT(observables::expectation_closed(13, 1.0), WithinAbs(3.137849976413497, 1e-9));
    CHECK_THAT(observables::expectation_closed(15, 1.0), WithinAbs(2.226437840641546, 1e-9));
    CHECK_THAT(observables::expectation_closed(6, 1.0), WithinAbs(3.1236163351675796, 1e-9));

    CHECK_THROWS_AS(observables::expectation_closed(0, 1.0), std::domain_error);
}

TEST_CASE("closed expectation equals brute-force double sum") {
    for (std::int64_t q = 1; q <= 80; ++q)
        for (const double beta : {0.0, 0.5, 1.0, kPi})
            CHECK_THAT(observables::expectation_closed(q, beta), WithinAbs(expectation_oracle(q, beta), 1e-9));
    // spot checks past the dense range
    for (const std::int64_t q : {128, 169, 200})
        for (const double beta : {0.5, kPi})
            CHECK_THAT(observables::expectation_closed(q, beta), WithinAbs(expectation_oracle(q, beta), 1e-9));
}

TEST_CASE("closed expectation equals projector bilinear form") {
    for (std::int64_t q = 1; q <= 64; ++q) {
        const Matrix p = qphase::locked_projector(q);
        for (const double beta : {0.0, 0.5, 1.0, kPi}) {
            const Vector f = qphase::pure_phase_state(q, beta);
            const double bilinear = kPi * (f.adjoint() * p * f)(0, 0).real();
            CHECK_THAT(observables::expectation_closed(q, beta), WithinAbs(bilinear, 1e-12));
        }
    }
}

TEST_CASE("modified expectation") {
    for (const double beta : {0.0, 1.0, 4.4}) CHECK_THAT(observables::modified_expectation_closed(1, beta), WithinAbs(kPi, 1e-12));
    CHECK_THAT(observables::modified_expectation_closed(2, kPi), WithinAbs(kPi / 4, 1e-12));
    CHECK_THAT(observables::modified_expectation_closed(2, 0.0), WithinAbs(0.0, 1e-9));

    for (std::int64_t q = 1; q <= 60; ++q)
        for (const double beta : {0.0, 0.5, 1.0, kPi})
            CHECK_THAT(observables::modified_expectation_closed(q, beta),
                       WithinAbs(modified_expectation_oracle(q, beta), 1e-9));
}

TEST_CASE("definitional variance") {
    CHECK_THAT(observables::variance_definitional(2, kPi), WithinAbs(0.0, 1e-12));  // point mass
    CHECK(observables::variance_definitional(1, 3.1) == 0.0);
    CHECK_THAT(observables::variance_definitional(2, 0.0), WithinAbs(0.0, 1e-12));  // empty support

    for (const std::int64_t q : {2, 5, 13, 15, 40})
        for (const double beta : {0.0, 0.5, 1.0, kPi, 5.0})
            CHECK(observables::variance_definitional(q, beta) >= 0.0);

    // oracle-derived reference points at beta = pi
    CHECK_THAT(observables::variance_definitional(13, kPi), WithinAbs(0.37147329924338346, 1e-9));
    CHECK_THAT(observables::variance_definitional(15, kPi), WithinAbs(0.38492872791908117, 1e-9));
}

TEST_CASE("closed variance") {
    CHECK_THAT(observables::variance_closed(2, kPi), WithinAbs(0.0, 1e-12));
    // q = 1: 4*pi + (pi/pi)(pi - 2*pi) = 3*pi
    CHECK_THAT(observables::variance_closed(1, 0.0), WithinAbs(3.0 * kPi, 1e-12));
    CHECK_THAT(observables::variance_closed(2, 0.0), WithinAbs(0.0, 1e-9));
    CHECK_THAT(observables::variance_closed(13, kPi), WithinAbs(0.09965496882319425, 1e-9));
}

TEST_CASE("variants agree at q = 2 for every beta") {
    // the spectral operator equals pi*P at q = 2, so the definitional and
    // closed expectations coincide there
    for (const double beta : {0.0, 0.3, 1.0, 2.0, kPi, 4.8, 6.2})
        CHECK_THAT(observables::expectation_definitional(2, beta),
                   WithinAbs(observables::expectation_closed(2, beta), 1e-9));
}

TEST_CASE("observable report") {
    const auto r2 = observables::observable_report(2, kPi);
    CHECK_THAT(r2.expectation_def, WithinAbs(kPi, 1e-12));
    CHECK_THAT(r2.expectation_closed, WithinAbs(kPi, 1e-12));
    CHECK_THAT(r2.variance_def, WithinAbs(0.0, 1e-12));
    CHECK_THAT(r2.variance_closed, WithinAbs(0.0, 1e-12));
    CHECK_THAT(r2.discrepancy_expectation, WithinAbs(0.0, 1e-12));
    CHECK_THAT(r2.discrepancy_variance, WithinAbs(0.0, 1e-12));

    // q = 1: theta_0 = 0 forces the definitional expectation to 0 while the
    // closed form gives pi; the report carries the discrepancy verbatim
    const auto r1 = observables::observable_report(1, 0.0);
    CHECK(r1.expectation_def == 0.0);
    CHECK_THAT(r1.expectation_closed, WithinAbs(kPi, 1e-12));
    CHECK_THAT(r1.discrepancy_expectation, WithinAbs(kPi, 1e-12));

    // prime q sits clearly above the neighbouring composite
    const auto r13 = observables::observable_report(13, 1.0);
    const auto r15 = observables::observable_report(15, 1.0);
    CHECK(r13.expectation_closed > r15.expectation_closed);
    CHECK_THAT(r13.total_weight, WithinAbs(0.9988086688539906, 1e-9));
    CHECK_THAT(r13.modified_expectation, WithinAbs(0.07929298303241311, 1e-9));

    for (const std::int64_t q : {3, 10, 21}) {
        for (const double beta : {0.7, 2.2}) {
            const auto r = observables::observable_report(q, beta);
            CHECK_THAT(r.discrepancy_expectation, WithinAbs(std::abs(r.expectation_def - r.expectation_closed), 1e-15));
            CHECK_THAT(r.discrepancy_variance, WithinAbs(std::abs(r.variance_def - r.variance_closed), 1e-15));
            CHECK(std::isfinite(r.modified_expectation));
            CHECK(r.total_weight <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("renormalized variance") {
    CHECK(observables::variance_renormalized(5, 0.0) == 0.0);         // empty support
    CHECK_THAT(observables::variance_renormalized(2, kPi), WithinAbs(0.0, 1e-12));  // point mass
    for (const std::int64_t q : {3, 9, 14})
        for (const double beta : {0.4, 1.0, kPi}) CHECK(observables::variance_renormalized(q, beta) >= 0.0);
}

TEST_CASE("observable domain errors") {
    CHECK_THROWS_AS(observables::expectation_definitional(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(observables::variance_definitional(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(observables::modified_expectation_closed(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(observables::expectation_closed(3, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(observables::observable_report(0, 0.0), std::domain_error);
}
