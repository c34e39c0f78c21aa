#pragma once

#include <cmath>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/core/tridiag.hpp"

namespace parsweep {

/// Diagonal similarity transform T with Ahat = T^{-1} A T symmetric.
struct SymmetrizationResult {
    std::vector<double> scale;  ///< diagonal of T; scale[0] == 1
    TridiagMatrix sym;          ///< the symmetrized matrix
};

/// Builds T from the recurrence t_{k+1} = t_k * sqrt(sub_k / super_k).
/// Requires every paired off-diagonal product sub_k * super_k > 0; throws
/// NotSymmetrizable otherwise. The transformed off-diagonals both become
/// sign(super_k) * sqrt(sub_k * super_k) and the diagonal is unchanged.
inline SymmetrizationResult symmetrize(const TridiagMatrix& A) {
    const std::size_t n = A.n();
    SymmetrizationResult r;
    r.scale.assign(n, 1.0);
    r.sym.diag = A.diag;
    r.sym.sub.resize(n - 1);
    r.sym.super.resize(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        double product = A.sub[k] * A.super[k];
        if (!(product > 0.0)) throw NotSymmetrizable(k);
        r.scale[k + 1] = r.scale[k] * std::sqrt(A.sub[k] / A.super[k]);
        double off = std::copysign(std::sqrt(product), A.super[k]);
        r.sym.sub[k] = off;
        r.sym.super[k] = off;
    }
    return r;
}

}  // namespace parsweep
