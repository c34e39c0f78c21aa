#pragma once

#include <cmath>
#include <vector>

#include "parsweep/core/tridiag.hpp"

namespace parsweep {

/// Outcome of the row-wise diagonal dominance test
///   |b_i| >= |a_i| + |c_i|   (interior rows)
///   |b_1| >= |c_1|,  |b_n| >= |a_n|
/// which is the stability criterion for the whole boundary-propagation
/// machinery: dominance with at least one strict row keeps every
/// homogeneous-solution entry within [-1, 1].
struct DominanceReport {
    bool dominant = false;         ///< all row inequalities hold
    bool strict_somewhere = false; ///< at least one inequality is strict
    double worst_margin = 0.0;     ///< min over rows of |b_i| - |a_i| - |c_i|
};

inline DominanceReport check_dominance(const TridiagMatrix& A) {
    const std::size_t n = A.n();
    DominanceReport rep;
    rep.dominant = true;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        if (i > 0) off += std::abs(A.lower(i));
        if (i + 1 < n) off += std::abs(A.upper(i));
        double margin = std::abs(A.diag[i]) - off;
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (margin < 0.0) rep.dominant = false;
        if (margin > 0.0) rep.strict_somewhere = true;
    }
    return rep;
}

}  // namespace parsweep
