#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace phaselock {

using Complex = std::complex<double>;

// Dense storage throughout; dimensions stay at desk scale (q up to a few
// thousand), so O(q^2) memory is a non-issue.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

}  // namespace phaselock
