#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "parsweep/dichotomy/betas.hpp"
#include "parsweep/dichotomy/level_sets.hpp"
#include "parsweep/dichotomy/preliminary.hpp"
#include "parsweep/executor.hpp"

namespace parsweep {

/// Per-worker operation counters; integer sums keep RunStats deterministic
/// across schedules.
struct WorkCounters {
    explicit WorkCounters(std::size_t workers)
        : combine_terms(workers, 0), local_flops(workers, 0) {}
    std::vector<std::uint64_t> combine_terms;
    std::vector<std::uint64_t> local_flops;

    std::uint64_t total_combine() const {
        std::uint64_t s = 0;
        for (auto v : combine_terms) s += v;
        return s;
    }
    std::uint64_t total_local_flops() const {
        std::uint64_t s = 0;
        for (auto v : local_flops) s += v;
        return s;
    }
};

namespace detail {

/// Sum of the in-segment block contributions, evaluated at boundary
/// position e. Blocks (kl, kr] of the segment are combined through the
/// sampled homogeneous solutions; each accumulated product counts as one
/// combination term.
inline double segment_particular(const PreliminaryData& prelim, const BetaSet& betas,
                                 std::ptrdiff_t kl, std::ptrdiff_t kr, std::ptrdiff_t e,
                                 std::uint64_t& terms) {
    double s = 0.0;
    for (std::ptrdiff_t t = kl + 1; t <= e; ++t) {
        s += betas.right[t] * prelim.zr(t, e);
        ++terms;
    }
    for (std::ptrdiff_t t = e + 1; t <= kr; ++t) {
        s += betas.left[t] * prelim.zl(t - 1, e);
        ++terms;
    }
    return s;
}

/// One boundary component inside the segment whose nearest already-known
/// neighbours are positions kl and kr (-1 / p for the system ends). The
/// known endpoint values enter through the segment's homogeneous solutions;
/// matching both endpoints is a 2x2 solve in the propagation coefficients.
inline double segment_component(const PreliminaryData& prelim, const BetaSet& betas,
                                const std::vector<double>& value, std::ptrdiff_t kl,
                                std::ptrdiff_t kr, std::ptrdiff_t i, std::uint64_t& terms) {
    const auto p = static_cast<std::ptrdiff_t>(prelim.p());
    const double vi = segment_particular(prelim, betas, kl, kr, i, terms);
    const bool left_known = kl >= 0;
    const bool right_known = kr < p;

    if (left_known && right_known) {
        const double b1 = value[kl] - segment_particular(prelim, betas, kl, kr, kl, terms);
        const double b2 = value[kr] - segment_particular(prelim, betas, kl, kr, kr, terms);
        const double m12 = prelim.zl(kr, kl);
        const double m21 = prelim.zr(kl, kr);
        const double det = 1.0 - m12 * m21;
        const double c_left = (b1 - m12 * b2) / det;
        const double c_right = (b2 - m21 * b1) / det;
        return vi + c_left * prelim.zr(kl, i) + c_right * prelim.zl(kr, i);
    }
    if (right_known) {
        const double c_right = value[kr] - segment_particular(prelim, betas, kl, kr, kr, terms);
        return vi + c_right * prelim.zl(kr, i);
    }
    if (left_known) {
        const double c_left = value[kl] - segment_particular(prelim, betas, kl, kr, kl, terms);
        return vi + c_left * prelim.zr(kl, i);
    }
    return vi;  // whole system: plain two-sided combination, no corrections
}

}  // namespace detail

/// Solution components at every partition boundary, computed level by level
/// in the dichotomy order. Levels are barriers; elements within one level
/// are independent items under `exec`. Total combination work is
/// O(p log2 p) accumulated terms.
inline std::vector<double> solve_boundaries(const PreliminaryData& prelim, const BetaSet& betas,
                                            Executor& exec = serial_executor(),
                                            WorkCounters* counters = nullptr) {
    const std::size_t p = prelim.p();
    std::vector<double> value(p, 0.0);
    if (p == 0) return value;

    std::vector<bool> known(p, false);
    const LevelSets sets = build_level_sets(p);

    for (const auto& level : sets.levels) {
        exec.for_each(level.size(), [&](std::size_t worker, std::size_t item) {
            const auto i = static_cast<std::ptrdiff_t>(level[item] - 1);
            std::ptrdiff_t kl = i - 1;
            while (kl >= 0 && !known[kl]) --kl;
            std::ptrdiff_t kr = i + 1;
            while (kr < static_cast<std::ptrdiff_t>(p) && !known[kr]) ++kr;

            std::uint64_t terms = 0;
            value[i] = detail::segment_component(prelim, betas, value, kl, kr, i, terms);
            if (counters) counters->combine_terms[worker] += terms;
        });
        for (std::size_t pos : level) known[pos - 1] = true;
    }
    return value;
}

/// Reference path that evaluates every boundary component by the full
/// two-sided combination over all p+1 blocks: O(p^2) accumulation terms.
/// Kept for the complexity comparison and as a second algebraic route.
inline std::vector<double> solve_boundaries_two_sided(const PreliminaryData& prelim,
                                                      const BetaSet& betas,
                                                      WorkCounters* counters = nullptr) {
    const auto p = static_cast<std::ptrdiff_t>(prelim.p());
    std::vector<double> value(p, 0.0);
    std::uint64_t terms = 0;
    for (std::ptrdiff_t i = 0; i < p; ++i)
        value[i] = detail::segment_particular(prelim, betas, -1, p, i, terms);
    if (counters) counters->combine_terms[0] += terms;
    return value;
}

/// Side-by-side result of the production combination and the uncorrected
/// textbook-style segment formula (known endpoints propagated without the
/// closing endpoint correction). The divergence quantifies how much the
/// endpoint matching matters; the production path is the one validated
/// against the dense oracle.
struct BoundaryDebugReport {
    std::vector<double> value;          ///< production dichotomy values
    std::vector<double> literal_value;  ///< one-sided delta-term variant
    double max_divergence = 0.0;
};

/// Debug-mode evaluation of the one-sided delta-term variant: for a segment
/// (kl, kr) around position i it sums blocks (kl, i] rightward and
/// (i, kr-1] leftward, then adds
///   delta_left  = X[kl]*ZR(kl->i) - inv(A)[r+1][r] * f[r] * ZR(row r+1 ->i)
///   delta_right = X[kr]*ZL(kr->i)
/// with r the known left boundary row. Needs A and f to form the row-r+1
/// correction, which is why the production path does not use it.
inline BoundaryDebugReport solve_boundaries_debug(const TridiagMatrix& A,
                                                  const PreliminaryData& prelim,
                                                  const BetaSet& betas,
                                                  std::span<const double> f) {
    BoundaryDebugReport report;
    report.value = solve_boundaries(prelim, betas);

    const auto p = static_cast<std::ptrdiff_t>(prelim.p());
    report.literal_value.assign(p, 0.0);
    std::vector<bool> known(p, false);
    const LevelSets sets = build_level_sets(p);

    for (const auto& level : sets.levels) {
        for (std::size_t pos : level) {
            const auto i = static_cast<std::ptrdiff_t>(pos - 1);
            std::ptrdiff_t kl = i - 1;
            while (kl >= 0 && !known[kl]) --kl;
            std::ptrdiff_t kr = i + 1;
            while (kr < p && !known[kr]) ++kr;

            double lit = 0.0;
            for (std::ptrdiff_t t = kl + 1; t <= i; ++t)
                lit += betas.right[t] * prelim.zr(t, i);
            for (std::ptrdiff_t t = i + 1; t <= kr - 1; ++t)
                lit += betas.left[t] * prelim.zl(t - 1, i);

            if (kl >= 0) {
                const std::size_t row = prelim.at[kl].row;  // 1-based known row
                lit += report.value[kl] * prelim.zr(kl, i);
                auto g_next = inverse_row_transpose(A, row);  // 0-based row index `row`
                std::vector<double> e(A.n() - row, 0.0);
                e[0] = 1.0;
                auto z_next = thomas_solve(b_right_matrix(A, row + 1), e);
                lit -= g_next[row - 1] * f[row - 1] * z_next[prelim.at[i].row - (row + 1)];
            }
            if (kr < p) lit += report.value[kr] * prelim.zl(kr, i);
            report.literal_value[i] = lit;
        }
        for (std::size_t pos : level) known[pos - 1] = true;
    }

    for (std::ptrdiff_t i = 0; i < p; ++i)
        report.max_divergence = std::max(report.max_divergence,
                                         std::abs(report.value[i] - report.literal_value[i]));
    return report;
}

}  // namespace parsweep
