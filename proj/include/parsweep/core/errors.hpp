#pragma once

#include <stdexcept>
#include <string>

namespace parsweep {

/// Base class for all solver-level failures.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An elimination pivot fell below the breakdown threshold; the matrix is
/// singular or numerically indistinguishable from singular.
struct PivotBreakdown : SolverError {
    explicit PivotBreakdown(std::size_t row)
        : SolverError("pivot breakdown during forward elimination at row " +
                      std::to_string(row)),
          row(row) {}
    std::size_t row;
};

/// Dense elimination found no usable pivot column.
struct Singular : SolverError {
    using SolverError::SolverError;
};

/// symmetrize() requires paired off-diagonal entries with equal signs.
struct NotSymmetrizable : SolverError {
    explicit NotSymmetrizable(std::size_t k)
        : SolverError("off-diagonal product sub[" + std::to_string(k) +
                      "]*super[" + std::to_string(k) +
                      "] is not positive; no diagonal similarity transform exists"),
          index(k) {}
    std::size_t index;
};

/// The explicit inverse-row factorization over/underflowed; callers should
/// fall back to transpose solves for the requested rows.
struct OracleFallbackRequired : SolverError {
    using SolverError::SolverError;
};

/// decompose() was asked for more processor elements than n/2.
struct TooManyPEs : SolverError {
    TooManyPEs(std::size_t n, std::size_t p)
        : SolverError("cannot place " + std::to_string(n) + " rows on " +
                      std::to_string(p) + " PEs with every range >= 2 rows") {}
};

/// An iterative method exceeded its iteration budget.
struct NonConvergence : SolverError {
    using SolverError::SolverError;
};

/// A worker thread terminated with an exception; `pe` names the worker.
struct WorkerPanic : SolverError {
    WorkerPanic(std::size_t pe, const std::string& what)
        : SolverError("worker PE " + std::to_string(pe) + " failed: " + what),
          pe(pe) {}
    std::size_t pe;
};

/// Malformed text input; carries the 1-based line number for diagnostics.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line(line) {}
    std::size_t line;
};

}  // namespace parsweep
