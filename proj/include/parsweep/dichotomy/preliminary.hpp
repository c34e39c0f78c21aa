#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/core/inverse_rows.hpp"
#include "parsweep/core/symmetrize.hpp"
#include "parsweep/core/thomas.hpp"
#include "parsweep/core/tridiag.hpp"
#include "parsweep/dichotomy/partition.hpp"
#include "parsweep/executor.hpp"

namespace parsweep {

/// How the inverse-matrix rows of the preliminary phase are obtained.
enum class GRowStrategy {
    Auto,             ///< pick by matrix shape, with automatic fallbacks
    DirectSymmetric,  ///< solve A g = e_k (rows equal columns)
    Symmetrize,       ///< diagonal similarity transform, then back-scale
    ExplicitInverse,  ///< two-solve product representation of inv(A)
    TransposeSolve,   ///< sweep on A^T per row
};

/// One-sided matrix B^L_k: rows 1..k of A with row k replaced by a unit row.
/// Solving B^L_k z = e_last yields the homogeneous solution that carries a
/// unit value at row k leftward through rows 1..k-1.
inline TridiagMatrix b_left_matrix(const TridiagMatrix& A, std::size_t k) {
    TridiagMatrix B;
    B.diag.assign(A.diag.begin(), A.diag.begin() + k);
    B.diag[k - 1] = 1.0;
    B.sub.assign(A.sub.begin(), A.sub.begin() + (k - 1));
    B.sub[k - 2] = 0.0;
    B.super.assign(A.super.begin(), A.super.begin() + (k - 1));
    return B;
}

/// One-sided matrix B^R_k: rows k..n of A with row k replaced by a unit row;
/// carries a unit value at row k rightward through rows k+1..n.
inline TridiagMatrix b_right_matrix(const TridiagMatrix& A, std::size_t k) {
    TridiagMatrix B;
    B.diag.assign(A.diag.begin() + (k - 1), A.diag.end());
    B.diag[0] = 1.0;
    B.sub.assign(A.sub.begin() + (k - 1), A.sub.end());
    B.super.assign(A.super.begin() + (k - 1), A.super.end());
    B.super[0] = 0.0;
    return B;
}

/// Once-per-matrix data for one partition boundary at 1-based row `row`:
/// the inverse-matrix row and the two one-sided homogeneous solutions.
struct BoundaryData {
    std::size_t row = 0;
    std::vector<double> g_row;    ///< row `row` of inv(A), full length n
    std::vector<double> z_left;   ///< over rows 1..row; last entry 1
    std::vector<double> z_right;  ///< over rows row..n; first entry 1
};

/// Product of the preliminary phase: per-boundary data plus the homogeneous
/// solutions sampled at every other boundary row (the only values the
/// per-right-hand-side combination step ever reads).
struct PreliminaryData {
    Partition part;
    GRowStrategy strategy_used = GRowStrategy::DirectSymmetric;
    std::vector<BoundaryData> at;

    /// (Z^R at boundary j) evaluated at boundary row i; requires i >= j.
    double zr(std::size_t j, std::size_t i) const { return zr_samples_[j * p() + i]; }
    /// (Z^L at boundary j) evaluated at boundary row i; requires i <= j.
    double zl(std::size_t j, std::size_t i) const { return zl_samples_[j * p() + i]; }

    std::size_t p() const { return part.p(); }

    /// Largest max-norm over all stored Z vectors; <= 1 under dominance.
    double max_z_norm() const {
        double best = 0.0;
        for (const auto& b : at) {
            for (double v : b.z_left) best = std::max(best, std::abs(v));
            for (double v : b.z_right) best = std::max(best, std::abs(v));
        }
        return best;
    }

    void build_samples() {
        const std::size_t np = p();
        zr_samples_.assign(np * np, 0.0);
        zl_samples_.assign(np * np, 0.0);
        for (std::size_t j = 0; j < np; ++j) {
            const std::size_t rj = at[j].row;
            for (std::size_t i = j; i < np; ++i)
                zr_samples_[j * np + i] = at[j].z_right[at[i].row - rj];
            for (std::size_t i = 0; i <= j; ++i)
                zl_samples_[j * np + i] = at[j].z_left[at[i].row - 1];
        }
    }

private:
    std::vector<double> zr_samples_;
    std::vector<double> zl_samples_;
};

namespace detail {

/// Per-boundary inverse rows under a fixed strategy. The symmetrized route
/// back-scales through the similarity diagonal; the explicit route shares
/// one two-solve factorization across all boundaries.
class GRowProvider {
public:
    GRowProvider(const TridiagMatrix& A, GRowStrategy strategy) : A_(A), strategy_(strategy) {
        if (strategy_ == GRowStrategy::Auto)
            strategy_ = A.is_symmetric() ? GRowStrategy::DirectSymmetric : GRowStrategy::Symmetrize;

        if (strategy_ == GRowStrategy::Symmetrize) {
            try {
                sym_ = symmetrize(A);
                for (double t : sym_.scale)
                    if (!(std::isfinite(t) && t > 0.0))
                        throw NotSymmetrizable(0);
            } catch (const NotSymmetrizable&) {
                if (strategy != GRowStrategy::Auto) throw;
                strategy_ = GRowStrategy::ExplicitInverse;
            }
        }
        if (strategy_ == GRowStrategy::ExplicitInverse) {
            try {
                factors_ = build_inverse_factors(A);
            } catch (const OracleFallbackRequired&) {
                if (strategy != GRowStrategy::Auto) throw;
                strategy_ = GRowStrategy::TransposeSolve;
            }
        }
    }

    GRowStrategy strategy() const { return strategy_; }

    std::vector<double> row(std::size_t r0) const {  // 0-based row
        switch (strategy_) {
            case GRowStrategy::DirectSymmetric: {
                std::vector<double> e(A_.n(), 0.0);
                e[r0] = 1.0;
                return thomas_solve(A_, e);
            }
            case GRowStrategy::Symmetrize: {
                std::vector<double> e(A_.n(), 0.0);
                e[r0] = 1.0;
                auto g = thomas_solve(sym_.sym, e);
                for (std::size_t j = 0; j < g.size(); ++j)
                    g[j] *= sym_.scale[r0] / sym_.scale[j];
                return g;
            }
            case GRowStrategy::ExplicitInverse:
                return factors_.row(r0);
            default:
                return inverse_row_transpose(A_, r0);
        }
    }

private:
    const TridiagMatrix& A_;
    GRowStrategy strategy_;
    SymmetrizationResult sym_;
    InverseFactors factors_;
};

}  // namespace detail

/// Phase 1 of the two-step solver: performed once per matrix/partition,
/// reused for every right-hand side. Boundaries are processed as independent
/// items under `exec`; errors propagate through the executor.
inline PreliminaryData compute_preliminary(const TridiagMatrix& A, const Partition& part,
                                           GRowStrategy strategy = GRowStrategy::Auto,
                                           Executor& exec = serial_executor()) {
    const std::size_t n = A.n();
    PreliminaryData prelim;
    prelim.part = part;
    prelim.at.resize(part.p());

    detail::GRowProvider grows(A, strategy);
    prelim.strategy_used = grows.strategy();

    exec.for_each(part.p(), [&](std::size_t, std::size_t idx) {
        const std::size_t row = part.boundaries[idx];
        BoundaryData& data = prelim.at[idx];
        data.row = row;
        data.g_row = grows.row(row - 1);

        std::vector<double> e(row, 0.0);
        e[row - 1] = 1.0;
        data.z_left = thomas_solve(b_left_matrix(A, row), e);

        e.assign(n - row + 1, 0.0);
        e[0] = 1.0;
        data.z_right = thomas_solve(b_right_matrix(A, row), e);
    });

    prelim.build_samples();
    return prelim;
}

}  // namespace parsweep
