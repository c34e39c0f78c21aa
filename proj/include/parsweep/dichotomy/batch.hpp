#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parsweep/dichotomy/betas.hpp"
#include "parsweep/dichotomy/boundary_solve.hpp"
#include "parsweep/dichotomy/local_solve.hpp"
#include "parsweep/dichotomy/preliminary.hpp"
#include "parsweep/executor.hpp"

namespace parsweep {

/// Phase 2 for a single right-hand side against already-computed
/// preliminary data: betas, boundary components in dichotomy order, then
/// independent block sweeps. Each block writes rows [n_t, n_{t+1}) so output
/// slots never overlap; the final block also writes row n.
inline void solve_with_preliminary_into(const TridiagMatrix& A, const PreliminaryData& prelim,
                                        std::span<const double> f, std::span<double> out,
                                        Executor& exec = serial_executor(),
                                        WorkCounters* counters = nullptr,
                                        std::vector<LocalScratch>* scratch_pool = nullptr) {
    const Partition& part = prelim.part;
    const std::size_t p = part.p();

    const BetaSet betas = compute_betas(f, part, prelim, exec);
    const std::vector<double> boundary = solve_boundaries(prelim, betas, exec, counters);

    std::vector<LocalScratch> local_scratch;
    std::vector<LocalScratch>& pool = scratch_pool ? *scratch_pool : local_scratch;
    if (pool.size() < exec.workers()) pool.resize(exec.workers());

    exec.for_each(p + 1, [&](std::size_t worker, std::size_t t) {
        const std::size_t lo = part.block_begin(t);
        const std::size_t hi_owned = part.block_end(t) - 1;  // last owned row, 1-based
        const std::size_t hi_closed = t == p ? part.n : part.boundaries[t];

        std::optional<double> first_val, last_val;
        if (t > 0) first_val = boundary[t - 1];
        if (t < p) last_val = boundary[t];

        LocalScratch& scratch = pool[worker];
        scratch.x.resize(hi_closed - lo + 1);
        solve_local_into(A, part, t, f, first_val, last_val, scratch, scratch.x);
        for (std::size_t row = lo; row <= hi_owned; ++row)
            out[row - 1] = scratch.x[row - lo];
        if (counters) counters->local_flops[worker] += 8 * (hi_closed - lo + 1);
    });
}

/// Solves the whole series against one matrix: the preliminary phase runs
/// exactly once, then every right-hand side costs one beta/boundary/local
/// pass. This is the production entry point for "many right-hand sides,
/// constant matrix" workloads.
inline std::vector<std::vector<double>> solve_batch(
    const TridiagMatrix& A, const Partition& part,
    const std::vector<std::vector<double>>& rhs_series,
    GRowStrategy strategy = GRowStrategy::Auto, Executor& exec = serial_executor(),
    WorkCounters* counters = nullptr) {
    part.validate();
    const PreliminaryData prelim = compute_preliminary(A, part, strategy, exec);

    std::vector<std::vector<double>> solutions(rhs_series.size());
    std::vector<LocalScratch> scratch_pool;
    for (std::size_t k = 0; k < rhs_series.size(); ++k) {
        solutions[k].resize(A.n());
        // counters carry per-solve semantics: record the first solve only
        WorkCounters* per_solve = (k == 0) ? counters : nullptr;
        solve_with_preliminary_into(A, prelim, rhs_series[k], solutions[k], exec, per_solve,
                                    &scratch_pool);
    }
    return solutions;
}

}  // namespace parsweep
