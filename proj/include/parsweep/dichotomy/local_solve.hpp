#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parsweep/core/thomas.hpp"
#include "parsweep/core/tridiag.hpp"
#include "parsweep/dichotomy/partition.hpp"

namespace parsweep {

/// Reusable buffers for the per-block sweeps.
struct LocalScratch {
    TridiagMatrix B;
    std::vector<double> rhs, x, alpha, beta;
};

/// Solves one closed block [n_t, n_{t+1}] (1-based rows lo..hi) of the split
/// system. Rows at already-computed boundary components become unit rows
/// carrying `first_val` / `last_val`; the outermost blocks keep the original
/// first / last rows of A, whose values come from f. Returns the hi-lo+1
/// block values.
inline void solve_local_into(const TridiagMatrix& A, const Partition& part, std::size_t t,
                             std::span<const double> f, std::optional<double> first_val,
                             std::optional<double> last_val, LocalScratch& scratch,
                             std::span<double> out) {
    const std::size_t lo = t == 0 ? 1 : part.boundaries[t - 1];
    const std::size_t hi = t == part.p() ? part.n : part.boundaries[t];
    const std::size_t m = hi - lo + 1;

    TridiagMatrix& B = scratch.B;
    B.diag.assign(A.diag.begin() + (lo - 1), A.diag.begin() + hi);
    B.sub.assign(A.sub.begin() + (lo - 1), A.sub.begin() + (hi - 1));
    B.super.assign(A.super.begin() + (lo - 1), A.super.begin() + (hi - 1));

    scratch.rhs.assign(f.begin() + (lo - 1), f.begin() + hi);
    if (first_val) {
        B.diag[0] = 1.0;
        B.super[0] = 0.0;
        scratch.rhs[0] = *first_val;
    }
    if (last_val) {
        B.diag[m - 1] = 1.0;
        B.sub[m - 2] = 0.0;
        scratch.rhs[m - 1] = *last_val;
    }
    thomas_solve_into(B, scratch.rhs, out, scratch.alpha, scratch.beta);
}

inline std::vector<double> solve_local(const TridiagMatrix& A, const Partition& part,
                                       std::size_t t, std::span<const double> f,
                                       std::optional<double> first_val,
                                       std::optional<double> last_val) {
    const std::size_t lo = t == 0 ? 1 : part.boundaries[t - 1];
    const std::size_t hi = t == part.p() ? part.n : part.boundaries[t];
    std::vector<double> out(hi - lo + 1);
    LocalScratch scratch;
    solve_local_into(A, part, t, f, first_val, last_val, scratch, out);
    return out;
}

}  // namespace parsweep
