#pragma once

#include <cmath>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/core/thomas.hpp"
#include "parsweep/core/tridiag.hpp"

namespace parsweep {

/// Scale guard for the cumulative off-diagonal ratio products; beyond this
/// the explicit representation is abandoned in favour of transpose solves.
inline constexpr double kInverseScaleLimit = 1e280;

/// Rank-structured representation of the inverse of a tridiagonal matrix:
///
///   inv(A)[i][j] = y_i * z_j * rho_j   (i <= j)
///   inv(A)[i][j] = z_i * y_j * rho_j   (i >= j)
///
/// with A Y = e_n, A Z = (1/y_1) e_1 and rho_j the cumulative product of
/// super_k / sub_k ratios. Two sweeps produce every row of the inverse in
/// O(n) each, which is what makes the preliminary phase cheap for
/// non-symmetrizable matrices.
struct InverseFactors {
    std::vector<double> y;        // last inverse column
    std::vector<double> z;        // first inverse column scaled by 1/y_1
    std::vector<double> y_rho;    // y_j * rho_j
    std::vector<double> z_rho;    // z_j * rho_j

    std::size_t n() const { return y.size(); }

    /// Assembles row i of inv(A).
    std::vector<double> row(std::size_t i) const {
        std::vector<double> r(n());
        for (std::size_t j = 0; j < i; ++j) r[j] = z[i] * y_rho[j];
        for (std::size_t j = i; j < n(); ++j) r[j] = y[i] * z_rho[j];
        return r;
    }
};

/// Factorizes inv(A) into the two-solve product form. Throws
/// OracleFallbackRequired when the representation is numerically unusable:
/// a zero off-diagonal entry, y_1 below scale, or cumulative ratio products
/// outside [1/kInverseScaleLimit, kInverseScaleLimit].
inline InverseFactors build_inverse_factors(const TridiagMatrix& A) {
    const std::size_t n = A.n();

    for (std::size_t k = 0; k + 1 < n; ++k)
        if (A.sub[k] == 0.0 || A.super[k] == 0.0)
            throw OracleFallbackRequired(
                "zero off-diagonal entry: explicit inverse representation is undefined");

    InverseFactors f;
    std::vector<double> e(n, 0.0);
    e[n - 1] = 1.0;
    f.y = thomas_solve(A, e);
    if (!(std::abs(f.y[0]) >= 1.0 / kInverseScaleLimit))
        throw OracleFallbackRequired("corner inverse entry underflows the usable scale");

    e.assign(n, 0.0);
    e[0] = 1.0 / f.y[0];
    f.z = thomas_solve(A, e);

    f.y_rho.resize(n);
    f.z_rho.resize(n);
    double rho = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) rho *= A.super[j - 1] / A.sub[j - 1];
        if (!(std::abs(rho) <= kInverseScaleLimit && std::abs(rho) >= 1.0 / kInverseScaleLimit))
            throw OracleFallbackRequired("cumulative off-diagonal ratio product left [1e-280, 1e280]");
        f.y_rho[j] = f.y[j] * rho;
        f.z_rho[j] = f.z[j] * rho;
        if (!std::isfinite(f.y_rho[j]) || !std::isfinite(f.z_rho[j]))
            throw OracleFallbackRequired("inverse factor overflow");
    }
    return f;
}

/// Row i (0-based) of inv(A) through the explicit product representation.
/// Diagonal matrices short-circuit to e_i / b_i; all other failures of the
/// representation surface as OracleFallbackRequired so the caller can switch
/// to transpose solves.
inline std::vector<double> inverse_row_general(const TridiagMatrix& A, std::size_t i) {
    const std::size_t n = A.n();
    bool all_zero = true;
    for (std::size_t k = 0; k + 1 < n && all_zero; ++k)
        all_zero = A.sub[k] == 0.0 && A.super[k] == 0.0;
    if (all_zero) {
        if (std::abs(A.diag[i]) < kPivotFloor) throw PivotBreakdown(i);
        std::vector<double> r(n, 0.0);
        r[i] = 1.0 / A.diag[i];
        return r;
    }
    return build_inverse_factors(A).row(i);
}

/// Row i of inv(A) by a transpose sweep; the fallback route when the product
/// representation over/underflows.
inline std::vector<double> inverse_row_transpose(const TridiagMatrix& A, std::size_t i) {
    std::vector<double> e(A.n(), 0.0);
    e[i] = 1.0;
    return thomas_solve(transpose(A), e);
}

}  // namespace parsweep
