#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "parsweep/dichotomy/preliminary.hpp"

namespace parsweep {

/// Per-block weighted sums of the right-hand side against inverse-matrix
/// rows, indexed by 0-based half-open block t = [n_t, n_{t+1}):
///
///   right[t] = sum_{j in block t} f_j * (row n_{t+1} of inv(A))_j
///   left[t]  = sum_{j in block t} f_j * (row n_t     of inv(A))_j
///
/// right[t] is the solution value the block induces at its right edge,
/// left[t] at its left edge. right[p] and left[0] touch no boundary row and
/// stay zero.
struct BetaSet {
    std::vector<double> left;   ///< size p+1; left[0] unused
    std::vector<double> right;  ///< size p+1; right[p] unused
};

/// One solution component as a dot product with an inverse-matrix row.
inline double solve_component_direct(std::span<const double> g_row, std::span<const double> f) {
    double s = 0.0;
    for (std::size_t j = 0; j < g_row.size(); ++j) s += g_row[j] * f[j];
    return s;
}

/// Step 2.1 of every per-right-hand-side solve. Blocks are independent; the
/// executor may spread them across workers.
inline BetaSet compute_betas(std::span<const double> f, const Partition& part,
                             const PreliminaryData& prelim,
                             Executor& exec = serial_executor()) {
    const std::size_t p = part.p();
    BetaSet betas;
    betas.left.assign(p + 1, 0.0);
    betas.right.assign(p + 1, 0.0);

    exec.for_each(p + 1, [&](std::size_t, std::size_t t) {
        const std::size_t lo = part.block_begin(t);  // 1-based
        const std::size_t hi = part.block_end(t);
        if (t < p) {
            const auto& g = prelim.at[t].g_row;
            double s = 0.0;
            for (std::size_t j = lo; j < hi; ++j) s += f[j - 1] * g[j - 1];
            betas.right[t] = s;
        }
        if (t > 0) {
            const auto& g = prelim.at[t - 1].g_row;
            double s = 0.0;
            for (std::size_t j = lo; j < hi; ++j) s += f[j - 1] * g[j - 1];
            betas.left[t] = s;
        }
    });
    return betas;
}

}  // namespace parsweep
