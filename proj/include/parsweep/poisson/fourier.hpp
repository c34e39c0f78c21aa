#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "parsweep/dichotomy/batch.hpp"
#include "parsweep/executor.hpp"
#include "parsweep/poisson/dst.hpp"
#include "parsweep/poisson/grid2d.hpp"
#include "parsweep/runtime/decompose.hpp"

namespace parsweep::poisson {

/// Tridiagonal system of one direction-2 harmonic: B_l = T - d_l I with
/// d_l = 4 (h1/h2)^2 sin^2(pi l / (2 N2)) > 0, written with the -(2 + d_l)
/// diagonal. Strictly dominant for every l.
struct HarmonicSystem {
    std::size_t l = 0;
    double d_l = 0.0;
    TridiagMatrix matrix;
};

inline HarmonicSystem harmonic_system(std::size_t n1, std::size_t n2, double h1, double h2,
                                      std::size_t l) {
    HarmonicSystem sys;
    sys.l = l;
    const double s = std::sin(std::numbers::pi * static_cast<double>(l) / (2.0 * n2));
    sys.d_l = 4.0 * (h1 * h1) / (h2 * h2) * s * s;
    sys.matrix = TridiagMatrix::constant(n1 - 1, 1.0, -(2.0 + sys.d_l), 1.0);
    return sys;
}

/// Per-mesh state of the variable-separation solver: the direction-2 sine
/// transform plan and, for every harmonic, the matrix plus its preliminary
/// data. Building the workspace is the once-per-mesh phase; afterwards each
/// Poisson right-hand side costs two transform passes and one batched
/// tridiagonal pass. Harmonic plans larger than `cache_budget_bytes` in
/// total are rebuilt on the fly instead of cached.
class FourierWorkspace {
public:
    FourierWorkspace(std::size_t n1, std::size_t n2, double h1, double h2,
                     std::size_t dichotomy_pes = 1, Executor& exec = serial_executor(),
                     std::size_t cache_budget_bytes = std::size_t{2} << 30)
        : n1_(n1), n2_(n2), h1_(h1), h2_(h2), plan2_(n2) {
        const std::size_t order = n1_ - 1;
        pes_ = dichotomy_pes == 0 ? 1 : dichotomy_pes;
        while (pes_ > 1 && order < 2 * pes_) --pes_;
        part_ = pes_ == 1 ? Partition{order, {}} : decompose(order, pes_).induced_partition();

        const std::size_t per_plan =
            (3 * order + part_.p() * (2 * order + 2) + part_.p() * part_.p() * 2) * sizeof(double);
        cached_ = per_plan * (n2_ - 1) <= cache_budget_bytes;
        if (!cached_) return;

        plans_.resize(n2_ - 1);
        exec.for_each(n2_ - 1, [&](std::size_t, std::size_t item) {
            plans_[item] = build_plan(item + 1);
        });
    }

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    double h1() const { return h1_; }
    double h2() const { return h2_; }
    const Partition& partition() const { return part_; }
    bool cached() const { return cached_; }
    const DstPlan& plan2() const { return plan2_; }

    struct HarmonicPlan {
        TridiagMatrix matrix;
        PreliminaryData prelim;
    };

    /// Solves B_l x = rhs for one harmonic through the dichotomy path.
    void solve_harmonic(std::size_t l, std::span<const double> rhs, std::span<double> out,
                        std::vector<LocalScratch>& scratch) const {
        if (cached_) {
            const HarmonicPlan& plan = plans_[l - 1];
            solve_with_preliminary_into(plan.matrix, plan.prelim, rhs, out, serial_executor(),
                                        nullptr, &scratch);
            return;
        }
        HarmonicPlan plan = build_plan(l);
        solve_with_preliminary_into(plan.matrix, plan.prelim, rhs, out, serial_executor(),
                                    nullptr, &scratch);
    }

private:
    HarmonicPlan build_plan(std::size_t l) const {
        HarmonicPlan plan;
        plan.matrix = harmonic_system(n1_, n2_, h1_, h2_, l).matrix;
        plan.prelim = compute_preliminary(plan.matrix, part_);
        return plan;
    }

    std::size_t n1_, n2_;
    double h1_, h2_;
    std::size_t pes_ = 1;
    Partition part_;
    DstPlan plan2_;
    bool cached_ = false;
    std::vector<HarmonicPlan> plans_;
};

/// Direct solver for the Dirichlet Poisson problem laplace(u) = -f on the
/// mesh of `f`: sine-series expansion along direction 2, one tridiagonal
/// solve per harmonic along direction 1, inverse expansion. Rows and
/// harmonics are independent items under `exec`.
inline Grid2D fourier_solve(const Grid2D& f, const FourierWorkspace& ws,
                            Executor& exec = serial_executor()) {
    const std::size_t n1 = ws.n1();
    const std::size_t n2 = ws.n2();
    const double h1 = ws.h1();

    Grid2D coeff(n1, n2, ws.h1(), ws.h2());  // f-hat, then u-hat per harmonic
    Grid2D u(n1, n2, ws.h1(), ws.h2());

    const std::size_t workers = exec.workers();
    std::vector<DstScratch> dst_scratch(workers);
    std::vector<std::vector<LocalScratch>> solve_scratch(workers);
    std::vector<std::vector<double>> line_a(workers), line_b(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        line_a[w].resize(std::max(n1, n2));  // holds direction-1 or direction-2 lines
        line_b[w].resize(std::max(n1, n2));
    }

    // forward transform along direction 2, two interior rows per FFT
    const double fwd_scale = 2.0 / static_cast<double>(n2);
    const std::size_t row_pairs = (n1 - 1 + 1) / 2;
    exec.for_each(row_pairs, [&](std::size_t w, std::size_t item) {
        const std::size_t i = 1 + 2 * item;
        auto& out_a = line_a[w];
        auto& out_b = line_b[w];
        const double* row_i = &f.values[i * (n2 + 1) + 1];
        if (i + 1 <= n1 - 1) {
            const double* row_j = &f.values[(i + 1) * (n2 + 1) + 1];
            ws.plan2().apply_raw_pair({row_i, n2 - 1}, {row_j, n2 - 1}, {out_a.data(), n2 - 1},
                                      {out_b.data(), n2 - 1}, dst_scratch[w]);
            for (std::size_t l = 1; l < n2; ++l) {
                coeff.at(i, l) = fwd_scale * out_a[l - 1];
                coeff.at(i + 1, l) = fwd_scale * out_b[l - 1];
            }
        } else {
            ws.plan2().apply_raw({row_i, n2 - 1}, {out_a.data(), n2 - 1}, dst_scratch[w]);
            for (std::size_t l = 1; l < n2; ++l) coeff.at(i, l) = fwd_scale * out_a[l - 1];
        }
    });

    // one tridiagonal solve per harmonic, in place on the coefficient grid
    exec.for_each(n2 - 1, [&](std::size_t w, std::size_t item) {
        const std::size_t l = item + 1;
        auto& rhs = line_a[w];
        auto& sol = line_b[w];
        for (std::size_t i = 1; i < n1; ++i) rhs[i - 1] = -h1 * h1 * coeff.at(i, l);
        ws.solve_harmonic(l, {rhs.data(), n1 - 1}, {sol.data(), n1 - 1}, solve_scratch[w]);
        for (std::size_t i = 1; i < n1; ++i) coeff.at(i, l) = sol[i - 1];
    });

    // inverse transform along direction 2
    exec.for_each(row_pairs, [&](std::size_t w, std::size_t item) {
        const std::size_t i = 1 + 2 * item;
        auto& out_a = line_a[w];
        auto& out_b = line_b[w];
        const double* row_i = &coeff.values[i * (n2 + 1) + 1];
        if (i + 1 <= n1 - 1) {
            const double* row_j = &coeff.values[(i + 1) * (n2 + 1) + 1];
            ws.plan2().apply_raw_pair({row_i, n2 - 1}, {row_j, n2 - 1}, {out_a.data(), n2 - 1},
                                      {out_b.data(), n2 - 1}, dst_scratch[w]);
            for (std::size_t j = 1; j < n2; ++j) {
                u.at(i, j) = out_a[j - 1];
                u.at(i + 1, j) = out_b[j - 1];
            }
        } else {
            ws.plan2().apply_raw({row_i, n2 - 1}, {out_a.data(), n2 - 1}, dst_scratch[w]);
            for (std::size_t j = 1; j < n2; ++j) u.at(i, j) = out_a[j - 1];
        }
    });

    return u;
}

/// Convenience entry point: builds a single-PE workspace and solves once.
inline Grid2D fourier_solve(const Grid2D& f) {
    FourierWorkspace ws(f.n1, f.n2, f.h1, f.h2);
    return fourier_solve(f, ws);
}

}  // namespace parsweep::poisson
