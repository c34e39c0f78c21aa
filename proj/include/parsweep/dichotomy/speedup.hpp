#pragma once

#include <cmath>

namespace parsweep {

/// Operation-count speedup model for the two-sided combination algorithm:
/// a sequential sweep costs 8N, the combination path (12N + 2p^2)/p, so
/// S(N, p) = 8Np / (12N + 2p^2). Grows monotonically up to p0 = sqrt(6N),
/// then decays to zero as the O(p^2) combination work takes over.
inline double theoretical_speedup(double n_unknowns, double pe_count) {
    return 8.0 * n_unknowns * pe_count /
           (12.0 * n_unknowns + 2.0 * pe_count * pe_count);
}

/// PE count maximizing the model speedup.
inline double optimal_pe_count(double n_unknowns) { return std::sqrt(6.0 * n_unknowns); }

/// Model speedup at the optimal PE count: sqrt(6N) / 3.
inline double max_speedup(double n_unknowns) { return std::sqrt(6.0 * n_unknowns) / 3.0; }

}  // namespace parsweep
