#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "parsweep/poisson/grid2d.hpp"

namespace parsweep::poisson {

/// Dirichlet model problem on the unit square:
///   laplace(u) = -8 pi^2 sin(2 pi x) sin(2 pi y),  u = 0 on the boundary,
/// whose exact solution is u = sin(2 pi x) sin(2 pi y). Returns (f, exact)
/// sampled at the mesh nodes.
inline std::pair<Grid2D, Grid2D> model_problem(std::size_t n1, std::size_t n2) {
    Grid2D f(n1, n2, 1.0 / n1, 1.0 / n2);
    Grid2D exact(n1, n2, 1.0 / n1, 1.0 / n2);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i <= n1; ++i) {
        const double sx = std::sin(two_pi * f.x(i));
        for (std::size_t j = 0; j <= n2; ++j) {
            const double sy = std::sin(two_pi * f.y(j));
            exact.at(i, j) = sx * sy;
            f.at(i, j) = 8.0 * std::numbers::pi * std::numbers::pi * sx * sy;
        }
    }
    // pin boundary nodes of the exact field to hard zeros
    for (std::size_t i = 0; i <= n1; ++i) {
        exact.at(i, 0) = 0.0;
        exact.at(i, n2) = 0.0;
    }
    for (std::size_t j = 0; j <= n2; ++j) {
        exact.at(0, j) = 0.0;
        exact.at(n1, j) = 0.0;
    }
    return {std::move(f), std::move(exact)};
}

}  // namespace parsweep::poisson
