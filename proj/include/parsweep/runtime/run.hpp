#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "parsweep/dichotomy/batch.hpp"
#include "parsweep/dichotomy/level_sets.hpp"
#include "parsweep/executor.hpp"
#include "parsweep/runtime/decompose.hpp"
#include "parsweep/runtime/thread_pool.hpp"

namespace parsweep {

/// Execution policy for run_batch.
struct ExecMode {
    enum class Kind { Simulated, Threaded } kind = Kind::Simulated;
    std::size_t workers = 1;  ///< used by Threaded

    static ExecMode simulated() { return {Kind::Simulated, 1}; }
    static ExecMode threaded(std::size_t w) { return {Kind::Threaded, w}; }
};

/// Instrumentation for one solve of the series. comm_rounds counts the
/// barrier-separated exchange phases a message-passing run would need
/// (beta scatter + one round per dichotomy level + result gather);
/// combine_terms and local_flops count the boundary-combination products and
/// sweep arithmetic of one right-hand side. All fields except wall_time are
/// deterministic functions of the inputs.
struct RunStats {
    std::uint64_t comm_rounds = 0;
    std::uint64_t combine_terms = 0;
    std::uint64_t local_flops = 0;
    double wall_time = 0.0;  ///< seconds for the whole run_batch call

    std::string to_json() const {
        char buf[192];
        std::snprintf(buf, sizeof buf,
                      "{\"comm_rounds\":%llu,\"combine_terms\":%llu,"
                      "\"local_flops\":%llu,\"wall_time\":%.17g}",
                      static_cast<unsigned long long>(comm_rounds),
                      static_cast<unsigned long long>(combine_terms),
                      static_cast<unsigned long long>(local_flops), wall_time);
        return buf;
    }
};

/// SWEEP_WORKERS overrides the worker count of threaded runs.
inline std::size_t effective_workers(const ExecMode& mode) {
    if (mode.kind == ExecMode::Kind::Simulated) return 1;
    if (const char* env = std::getenv("SWEEP_WORKERS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return mode.workers == 0 ? 1 : mode.workers;
}

/// Executes the batched solve under the chosen policy. Simulated mode runs
/// the exact worker-1 schedule on the calling thread; threaded mode uses a
/// pool with static chunking. Outputs are bitwise identical across modes and
/// worker counts because items only write disjoint slots in a fixed order.
inline std::pair<std::vector<std::vector<double>>, RunStats> run_batch(
    const ExecMode& mode, const TridiagMatrix& A, const Partition& part,
    const std::vector<std::vector<double>>& rhs_series,
    GRowStrategy strategy = GRowStrategy::Auto) {
    const std::size_t workers = effective_workers(mode);

    SerialExecutor serial;
    WorkerPool* pool = nullptr;
    std::unique_ptr<WorkerPool> pool_storage;
    if (mode.kind == ExecMode::Kind::Threaded) {
        pool_storage = std::make_unique<WorkerPool>(workers);
        pool = pool_storage.get();
    }
    Executor& exec = pool ? static_cast<Executor&>(*pool) : serial;

    WorkCounters counters(exec.workers());
    const auto t0 = std::chrono::steady_clock::now();
    auto solutions = solve_batch(A, part, rhs_series, strategy, exec, &counters);
    const auto t1 = std::chrono::steady_clock::now();

    RunStats stats;
    stats.combine_terms = counters.total_combine();
    stats.local_flops = counters.total_local_flops();
    stats.wall_time = std::chrono::duration<double>(t1 - t0).count();
    if (part.p() > 0)
        stats.comm_rounds = build_level_sets(part.p()).levels.size() + 2;
    return {std::move(solutions), stats};
}

inline std::pair<std::vector<std::vector<double>>, RunStats> run_batch(
    const ExecMode& mode, const TridiagMatrix& A, const Decomposition& decomp,
    const std::vector<std::vector<double>>& rhs_series,
    GRowStrategy strategy = GRowStrategy::Auto) {
    return run_batch(mode, A, decomp.induced_partition(), rhs_series, strategy);
}

}  // namespace parsweep
