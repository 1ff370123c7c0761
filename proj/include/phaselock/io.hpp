#pragma once

#include <ostream>
#include <string>

#include "phaselock/types.hpp"

namespace phaselock::io {

// Shortest %.12g rendering, locale-independent; negative zero collapses
// to "0" so repeated runs stay byte-identical.
std::string format_real(double x);

// {"dim": N, "rows": [[[re, im], ...], ...]}, one row per line, 12
// significant digits.  Square matrices only.
void write_matrix_json(std::ostream& out, const Matrix& m);
std::string matrix_to_json(const Matrix& m);

}  // namespace phaselock::io
