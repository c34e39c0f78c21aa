#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/dichotomy/batch.hpp"
#include "parsweep/executor.hpp"
#include "parsweep/poisson/grid2d.hpp"
#include "parsweep/runtime/decompose.hpp"

namespace parsweep::poisson {

/// Iteration bound for the alternating-direction sweep on a square N x N
/// mesh: n0(eps) = 0.2 ln(4N/pi) ln(4/eps), rounded up. This is the cycle
/// length the acceleration parameters are sized for.
inline std::size_t adi_iteration_bound(std::size_t n, double eps) {
    const double n0 = 0.2 * std::log(4.0 * static_cast<double>(n) / std::numbers::pi) *
                      std::log(4.0 / eps);
    if (n0 <= 0.0) return 0;
    return static_cast<std::size_t>(std::ceil(n0 - 1e-12));
}

namespace detail {

/// Geometric cyclic parameter set spanning the reciprocal spectral interval
/// [1/lambda_max, 1/lambda_min]:
///   tau_j = 1 / (lambda_max * (lambda_min/lambda_max)^((2j-1)/(2 n0))).
inline std::vector<double> geometric_parameters(double lambda_min, double lambda_max,
                                                std::size_t n0) {
    std::vector<double> taus(n0);
    const double ratio = lambda_min / lambda_max;
    for (std::size_t j = 1; j <= n0; ++j) {
        const double exponent =
            (2.0 * static_cast<double>(j) - 1.0) / (2.0 * static_cast<double>(n0));
        taus[j - 1] = 1.0 / (lambda_max * std::pow(ratio, exponent));
    }
    return taus;
}

}  // namespace detail

/// Cyclic acceleration parameters for the square N x N unit mesh, strictly
/// increasing within [1/lambda_max, 1/lambda_min] where
/// lambda_min = (4/h^2) sin^2(pi/(2N)) and lambda_max = (4/h^2) cos^2(pi/(2N)).
inline std::vector<double> adi_parameters(std::size_t n, std::size_t n0) {
    const double h = 1.0 / static_cast<double>(n);
    const double s = std::sin(std::numbers::pi / (2.0 * static_cast<double>(n)));
    const double c = std::cos(std::numbers::pi / (2.0 * static_cast<double>(n)));
    const double lambda_min = 4.0 / (h * h) * s * s;
    const double lambda_max = 4.0 / (h * h) * c * c;
    return detail::geometric_parameters(lambda_min, lambda_max, n0);
}

/// Everything the iteration reuses across steps: the parameter cycle and,
/// per parameter, the two half-step matrices with their preliminary data.
/// Building it costs n0 preliminary phases; afterwards a whole iteration is
/// two batched tridiagonal passes.
class AdiWorkspace {
public:
    AdiWorkspace(std::size_t n1, std::size_t n2, double h1, double h2, std::size_t cycle_length,
                 std::size_t dichotomy_pes = 1, Executor& exec = serial_executor())
        : n1_(n1), n2_(n2), h1_(h1), h2_(h2) {
        const double lmin = std::min(direction_lambda_min(n1, h1), direction_lambda_min(n2, h2));
        const double lmax = std::max(direction_lambda_max(n1, h1), direction_lambda_max(n2, h2));
        taus_ = detail::geometric_parameters(lmin, lmax, std::max<std::size_t>(cycle_length, 1));

        auto make_partition = [dichotomy_pes](std::size_t order) {
            std::size_t pes = dichotomy_pes == 0 ? 1 : dichotomy_pes;
            while (pes > 1 && order < 2 * pes) --pes;
            return pes == 1 ? Partition{order, {}} : decompose(order, pes).induced_partition();
        };
        part1_ = make_partition(n1_ - 1);
        part2_ = make_partition(n2_ - 1);

        steps_.resize(taus_.size());
        exec.for_each(taus_.size(), [&](std::size_t, std::size_t k) {
            const double tau = taus_[k];
            steps_[k].c1 = TridiagMatrix::constant(n1_ - 1, 1.0, -2.0 - h1_ * h1_ / tau, 1.0);
            steps_[k].c2 = TridiagMatrix::constant(n2_ - 1, 1.0, -2.0 - h2_ * h2_ / tau, 1.0);
            steps_[k].prelim1 = compute_preliminary(steps_[k].c1, part1_);
            steps_[k].prelim2 = compute_preliminary(steps_[k].c2, part2_);
        });
    }

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    const std::vector<double>& parameters() const { return taus_; }
    std::size_t cycle_length() const { return taus_.size(); }

    struct Step {
        TridiagMatrix c1, c2;
        PreliminaryData prelim1, prelim2;
    };
    const Step& step(std::size_t k) const { return steps_[k % steps_.size()]; }

private:
    static double direction_lambda_min(std::size_t n, double h) {
        const double s = std::sin(std::numbers::pi / (2.0 * static_cast<double>(n)));
        return 4.0 / (h * h) * s * s;
    }
    static double direction_lambda_max(std::size_t n, double h) {
        const double c = std::cos(std::numbers::pi / (2.0 * static_cast<double>(n)));
        return 4.0 / (h * h) * c * c;
    }

    std::size_t n1_, n2_;
    double h1_, h2_;
    std::vector<double> taus_;
    Partition part1_, part2_;
    std::vector<Step> steps_;
};

/// One Peaceman-Rachford iteration, reusing buffers across steps:
///   (T - (h1^2/tau) I) u+ = -h1^2 (u/tau + L2 u + f)   along direction 1,
///   (T - (h2^2/tau) I) u' = -h2^2 (u+/tau + L1 u+ + f) along direction 2.
/// Lines within each half-step are independent items; the transpose between
/// half-steps is realized by writing the intermediate field column-major.
class AdiIteration {
public:
    AdiIteration(const AdiWorkspace& ws, const Grid2D& f, Executor& exec = serial_executor())
        : ws_(ws), f_(f), exec_(exec), half_t_(f.n2, f.n1, f.h2, f.h1),
          next_(f.n1, f.n2, f.h1, f.h2) {
        const std::size_t workers = exec.workers();
        scratch_.resize(workers);
        rhs_buf_.resize(workers);
        sol_buf_.resize(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            rhs_buf_[w].resize(std::max(f.n1, f.n2));
            sol_buf_[w].resize(std::max(f.n1, f.n2));
        }
    }

    /// Advances u by iteration number k (selects parameter k mod n0).
    void step(Grid2D& u, std::size_t k) {
        const std::size_t n1 = f_.n1, n2 = f_.n2;
        const double h1 = f_.h1, h2 = f_.h2;
        const auto& step = ws_.step(k);
        const double tau = ws_.parameters()[k % ws_.cycle_length()];

        exec_.for_each(n2 - 1, [&](std::size_t w, std::size_t item) {
            const std::size_t j = item + 1;
            auto& rhs = rhs_buf_[w];
            auto& sol = sol_buf_[w];
            for (std::size_t i = 1; i < n1; ++i) {
                const double lambda2 =
                    (u.at(i, j + 1) - 2.0 * u.at(i, j) + u.at(i, j - 1)) / (h2 * h2);
                rhs[i - 1] = -h1 * h1 * (u.at(i, j) / tau + lambda2 + f_.at(i, j));
            }
            solve_with_preliminary_into(step.c1, step.prelim1, {rhs.data(), n1 - 1},
                                        {sol.data(), n1 - 1}, serial_executor(), nullptr,
                                        &scratch_[w]);
            double* out_row = &half_t_.values[j * (n1 + 1)];
            for (std::size_t i = 1; i < n1; ++i) out_row[i] = sol[i - 1];
        });

        exec_.for_each(n1 - 1, [&](std::size_t w, std::size_t item) {
            const std::size_t i = item + 1;
            auto& rhs = rhs_buf_[w];
            auto& sol = sol_buf_[w];
            for (std::size_t j = 1; j < n2; ++j) {
                const double uh = half_t_.at(j, i);
                const double lambda1 =
                    (half_t_.at(j, i + 1) - 2.0 * uh + half_t_.at(j, i - 1)) / (h1 * h1);
                rhs[j - 1] = -h2 * h2 * (uh / tau + lambda1 + f_.at(i, j));
            }
            solve_with_preliminary_into(step.c2, step.prelim2, {rhs.data(), n2 - 1},
                                        {sol.data(), n2 - 1}, serial_executor(), nullptr,
                                        &scratch_[w]);
            double* out_row = &next_.values[i * (n2 + 1)];
            for (std::size_t j = 1; j < n2; ++j) out_row[j] = sol[j - 1];
        });

        std::swap(u.values, next_.values);
    }

private:
    const AdiWorkspace& ws_;
    const Grid2D& f_;
    Executor& exec_;
    Grid2D half_t_;  ///< transposed half-step field (j rows, i columns)
    Grid2D next_;
    std::vector<std::vector<LocalScratch>> scratch_;
    std::vector<std::vector<double>> rhs_buf_, sol_buf_;
};

struct AdiResult {
    Grid2D u;
    std::size_t iterations = 0;
};

/// Peaceman-Rachford solver for laplace(u) = -f with zero Dirichlet data,
/// cycling tau through the workspace parameter set. Stops when the relative
/// successive difference falls under eps, or, when `exact` is given, when
/// the max-norm error has shrunk by the factor eps against the initial
/// error. Throws NonConvergence after 10 * cycle_length iterations.
inline AdiResult adi_solve(const Grid2D& f, double eps, const Grid2D& u0, const AdiWorkspace& ws,
                           Executor& exec = serial_executor(), const Grid2D* exact = nullptr) {
    Grid2D u = u0;
    Grid2D previous(f.n1, f.n2, f.h1, f.h2);
    AdiIteration iteration(ws, f, exec);

    const double err0 = exact ? max_abs_diff(u, *exact) : 0.0;
    if (exact && err0 == 0.0) return {std::move(u), 0};

    const std::size_t max_iterations = 10 * ws.cycle_length();
    for (std::size_t k = 0; k < max_iterations; ++k) {
        previous.values = u.values;
        iteration.step(u, k);
        const std::size_t done = k + 1;
        if (exact) {
            if (max_abs_diff(u, *exact) <= eps * err0) return {std::move(u), done};
        } else {
            const double diff = max_abs_diff(previous, u);
            if (diff == 0.0 || diff <= eps * max_abs(u)) return {std::move(u), done};
        }
    }
    throw NonConvergence("alternating-direction iteration exceeded " +
                         std::to_string(max_iterations) + " iterations");
}

}  // namespace parsweep::poisson
