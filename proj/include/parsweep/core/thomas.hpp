#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/core/tridiag.hpp"

namespace parsweep {

/// Pivots smaller than this abort the sweep; chosen near the double-precision
/// denormal boundary.
inline constexpr double kPivotFloor = 1e-300;

/// Sequential sweep (Thomas algorithm). Forward elimination computes
/// alpha_i = -c_i / (b_i + a_i * alpha_{i-1}) and the matching right-hand-side
/// coefficients, back substitution recovers x. O(n) time, O(n) workspace.
///
/// Throws PivotBreakdown if any elimination pivot |b_i + a_i*alpha_{i-1}|
/// falls below kPivotFloor.
inline void thomas_solve_into(const TridiagMatrix& A, std::span<const double> f,
                              std::span<double> x, std::vector<double>& alpha_scratch,
                              std::vector<double>& beta_scratch) {
    const std::size_t n = A.n();
    auto& alpha = alpha_scratch;
    auto& beta = beta_scratch;
    alpha.resize(n);
    beta.resize(n);

    double pivot = A.diag[0];
    if (std::abs(pivot) < kPivotFloor) throw PivotBreakdown(0);
    alpha[0] = (n > 1) ? -A.upper(0) / pivot : 0.0;
    beta[0] = f[0] / pivot;

    for (std::size_t i = 1; i < n; ++i) {
        pivot = A.diag[i] + A.lower(i) * alpha[i - 1];
        if (std::abs(pivot) < kPivotFloor) throw PivotBreakdown(i);
        alpha[i] = (i + 1 < n) ? -A.upper(i) / pivot : 0.0;
        beta[i] = (f[i] - A.lower(i) * beta[i - 1]) / pivot;
    }

    x[n - 1] = beta[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = beta[i] + alpha[i] * x[i + 1];
}

inline std::vector<double> thomas_solve(const TridiagMatrix& A, std::span<const double> f) {
    std::vector<double> x(A.n()), alpha, beta;
    thomas_solve_into(A, f, x, alpha, beta);
    return x;
}

/// The n-1 forward elimination coefficients alpha_i. Under diagonal dominance
/// every |alpha_i| <= 1, which is what keeps the sweep and the homogeneous
/// propagation vectors bounded.
inline std::vector<double> forward_coefficients(const TridiagMatrix& A) {
    const std::size_t n = A.n();
    std::vector<double> alpha(n - 1);
    double pivot = A.diag[0];
    if (std::abs(pivot) < kPivotFloor) throw PivotBreakdown(0);
    alpha[0] = -A.upper(0) / pivot;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        pivot = A.diag[i] + A.lower(i) * alpha[i - 1];
        if (std::abs(pivot) < kPivotFloor) throw PivotBreakdown(i);
        alpha[i] = -A.upper(i) / pivot;
    }
    return alpha;
}

}  // namespace parsweep
