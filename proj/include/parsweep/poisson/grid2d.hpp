#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/core/tridiag.hpp"

namespace parsweep::poisson {

/// Uniform rectangular mesh with node values: (N1+1) x (N2+1) nodes at
/// (i*h1, j*h2), stored row-major with j contiguous. Dirichlet fields keep
/// all boundary nodes at zero.
struct Grid2D {
    std::size_t n1 = 0, n2 = 0;  ///< cell counts per direction
    double h1 = 0.0, h2 = 0.0;   ///< mesh steps
    std::vector<double> values;  ///< (n1+1)*(n2+1) node values

    Grid2D() = default;
    Grid2D(std::size_t n1_, std::size_t n2_, double h1_, double h2_)
        : n1(n1_), n2(n2_), h1(h1_), h2(h2_), values((n1_ + 1) * (n2_ + 1), 0.0) {}

    /// Unit-square mesh with n x n cells.
    static Grid2D unit_square(std::size_t n) { return Grid2D(n, n, 1.0 / n, 1.0 / n); }

    double& at(std::size_t i, std::size_t j) { return values[i * (n2 + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * (n2 + 1) + j]; }

    double x(std::size_t i) const { return i * h1; }
    double y(std::size_t j) const { return j * h2; }

    bool same_mesh(const Grid2D& other) const {
        return n1 == other.n1 && n2 == other.n2 && h1 == other.h1 && h2 == other.h2;
    }
};

/// Max-norm over all nodes.
inline double max_abs(const Grid2D& g) {
    double best = 0.0;
    for (double v : g.values) best = std::max(best, std::abs(v));
    return best;
}

inline double max_abs_diff(const Grid2D& a, const Grid2D& b) {
    double best = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        best = std::max(best, std::abs(a.values[k] - b.values[k]));
    return best;
}

/// Five-point Laplacian at interior node (i, j).
inline double laplacian_at(const Grid2D& g, std::size_t i, std::size_t j) {
    const double d1 = (g.at(i + 1, j) - 2.0 * g.at(i, j) + g.at(i - 1, j)) / (g.h1 * g.h1);
    const double d2 = (g.at(i, j + 1) - 2.0 * g.at(i, j) + g.at(i, j - 1)) / (g.h2 * g.h2);
    return d1 + d2;
}

/// Grid text format: header "N1 N2 h1 h2", then the node values row-major.
inline void write_grid(std::ostream& out, const Grid2D& g) {
    using parsweep::detail::format_full;
    out << g.n1 << " " << g.n2 << " " << format_full(g.h1) << " " << format_full(g.h2) << "\n";
    for (std::size_t i = 0; i <= g.n1; ++i) {
        for (std::size_t j = 0; j <= g.n2; ++j)
            out << (j ? " " : "") << format_full(g.at(i, j));
        out << "\n";
    }
}

inline Grid2D read_grid(std::istream& in) {
    parsweep::detail::LineReader reader(in);
    auto header = reader.next_row(4, "grid header");
    if (header[0] < 2 || header[1] < 2 || header[0] != std::floor(header[0]) ||
        header[1] != std::floor(header[1]) || header[2] <= 0.0 || header[3] <= 0.0)
        throw ParseError(reader.line_number(), "grid header must be 'N1 N2 h1 h2' with N >= 2");
    Grid2D g(static_cast<std::size_t>(header[0]), static_cast<std::size_t>(header[1]), header[2],
             header[3]);
    for (std::size_t i = 0; i <= g.n1; ++i) {
        auto row = reader.next_row(g.n2 + 1, "grid row");
        for (std::size_t j = 0; j <= g.n2; ++j) g.at(i, j) = row[j];
    }
    return g;
}

}  // namespace parsweep::poisson
