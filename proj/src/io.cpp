#include "phaselock/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace phaselock::io {

std::string format_real(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_matrix_json(std::ostream& out, const Matrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("matrix dump requires a square matrix");
    const auto dim = m.rows();
    out << "{\n  \"dim\": " << dim << ",\n  \"rows\": [\n";
    for (Eigen::Index r = 0; r < dim; ++r) {
        out << "    [";
        for (Eigen::Index c = 0; c < dim; ++c) {
            out << '[' << format_real(m(r, c).real()) << ", " << format_real(m(r, c).imag()) << ']';
            if (c + 1 < dim) out << ", ";
        }
        out << ']' << (r + 1 < dim ? "," : "") << '\n';
    }
    out << "  ]\n}\n";
}

std::string matrix_to_json(const Matrix& m) {
    std::ostringstream oss;
    write_matrix_json(oss, m);
    return oss.str();
}

}  // namespace phaselock::io
