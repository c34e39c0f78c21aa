// Command-line front end: batched tridiagonal solves from files, Poisson
// runs, and a benchmark harness emitting speedup tables as CSV.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "parsweep/parsweep.hpp"

namespace {

using namespace parsweep;

constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerify = 4;

struct GlobalOptions {
    std::size_t workers = 1;
    std::string mode = "simulated";
    unsigned long seed = 12345;
    bool verify = false;

    ExecMode exec_mode() const {
        return mode == "threaded" ? ExecMode::threaded(workers) : ExecMode::simulated();
    }
};

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

TridiagMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open matrix file '" + path + "'");
    return read_matrix(in);
}

std::vector<std::vector<double>> load_rhs(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open rhs file '" + path + "'");
    return read_rhs_series(in, n);
}

int cmd_solve(const GlobalOptions& global, const std::string& matrix_path,
              const std::string& rhs_path, const std::string& partition_spec,
              const std::string& out_path, const std::string& stats_path) {
    TridiagMatrix A;
    std::vector<std::vector<double>> series;
    Partition part;
    try {
        A = load_matrix(matrix_path);
        series = load_rhs(rhs_path, A.n());
        if (partition_spec.empty()) {
            const std::size_t pes = std::max<std::size_t>(global.workers, 1);
            part = pes == 1 ? Partition{A.n(), {}}
                            : decompose(A.n(), pes).induced_partition();
        } else {
            part = Partition::parse(A.n(), partition_spec);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    std::vector<std::vector<double>> solutions;
    RunStats stats;
    try {
        auto [sol, st] = run_batch(global.exec_mode(), A, part, series);
        solutions = std::move(sol);
        stats = st;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    }

    if (global.verify) {
        try {
            DenseLU lu(A);
            for (std::size_t k = 0; k < series.size(); ++k) {
                auto want = lu.solve(series[k]);
                double num = 0.0, den = 0.0;
                for (std::size_t i = 0; i < want.size(); ++i) {
                    num = std::max(num, std::abs(solutions[k][i] - want[i]));
                    den = std::max(den, std::abs(want[i]));
                }
                if (num > 1e-9 * std::max(den, 1.0)) {
                    std::cerr << "verification failed on rhs " << k << ": relative error "
                              << num / std::max(den, 1.0) << "\n";
                    return kExitVerify;
                }
            }
        } catch (const SolverError& e) {
            std::cerr << "verification solver error: " << e.what() << "\n";
            return kExitVerify;
        }
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        write_rhs_series(out, A.n(), solutions);
    } else {
        write_rhs_series(std::cout, A.n(), solutions);
    }
    if (!stats_path.empty()) {
        std::ofstream out(stats_path);
        out << stats.to_json() << "\n";
    } else {
        std::cerr << stats.to_json() << "\n";
    }
    return 0;
}

struct PoissonOutcome {
    double error = 0.0;
    std::size_t iterations = 0;
    double seconds_per_problem = 0.0;
};

/// Runs `series` model problems on an n x n mesh; the workspace (the
/// preliminary phase) is built once for the whole series. When `rng` is
/// given, each series member perturbs the right-hand side.
PoissonOutcome run_poisson(const std::string& method, std::size_t n, double eps,
                           std::size_t series, std::size_t workers, Executor& exec,
                           std::mt19937_64* rng = nullptr) {
    auto [f, exact] = poisson::model_problem(n, n);
    PoissonOutcome outcome;
    std::uniform_real_distribution<double> noise(-1e-3, 1e-3);

    auto next_rhs = [&]() -> const poisson::Grid2D& {
        static thread_local poisson::Grid2D perturbed;
        if (!rng) return f;
        perturbed = f;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j) perturbed.at(i, j) += noise(*rng);
        return perturbed;
    };

    if (method == "fourier") {
        poisson::FourierWorkspace ws(n, n, f.h1, f.h2, workers, exec);
        poisson::Grid2D u(n, n, f.h1, f.h2);
        const double t0 = now_seconds();
        for (std::size_t s = 0; s < series; ++s) u = poisson::fourier_solve(next_rhs(), ws, exec);
        outcome.seconds_per_problem = (now_seconds() - t0) / static_cast<double>(series);
        outcome.error = poisson::max_abs_diff(u, exact);
        return outcome;
    }

    const std::size_t n0 = std::max<std::size_t>(poisson::adi_iteration_bound(n, eps), 1);
    poisson::AdiWorkspace ws(n, n, f.h1, f.h2, n0, workers, exec);
    poisson::Grid2D u0(n, n, f.h1, f.h2);
    poisson::AdiResult result;
    const double t0 = now_seconds();
    for (std::size_t s = 0; s < series; ++s)
        result = poisson::adi_solve(next_rhs(), eps, u0, ws, exec);
    outcome.seconds_per_problem = (now_seconds() - t0) / static_cast<double>(series);
    outcome.error = poisson::max_abs_diff(result.u, exact);
    outcome.iterations = result.iterations;
    return outcome;
}

int cmd_poisson(const GlobalOptions& global, const std::string& method, std::size_t n, double eps,
                std::size_t series) {
    try {
        SerialExecutor serial;
        std::unique_ptr<WorkerPool> pool;
        const std::size_t workers = effective_workers(global.exec_mode());
        if (global.exec_mode().kind == ExecMode::Kind::Threaded && workers > 1)
            pool = std::make_unique<WorkerPool>(workers);
        Executor& exec = pool ? static_cast<Executor&>(*pool) : serial;

        auto outcome = run_poisson(method, n, eps, series, workers, exec);
        std::cout << "method " << method << " n " << n << " series " << series << "\n";
        std::printf("max_error %.6e\n", outcome.error);
        if (method == "adi") std::cout << "iterations " << outcome.iterations << "\n";
        std::printf("t_avr %.6e\n", outcome.seconds_per_problem);
        return 0;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    }
}

int cmd_bench(const GlobalOptions& global, const std::string& method,
              std::vector<std::size_t> sizes, std::vector<std::size_t> workers_list,
              std::size_t series, const std::string& out_path, bool markdown, bool randomize) {
    // the np=1 row defines the speedup baseline, so it is always measured
    if (std::find(workers_list.begin(), workers_list.end(), std::size_t{1}) ==
        workers_list.end())
        workers_list.insert(workers_list.begin(), 1);
    std::sort(workers_list.begin(), workers_list.end());
    workers_list.erase(std::unique(workers_list.begin(), workers_list.end()),
                       workers_list.end());

    std::ostringstream csv;
    csv << "size,np,t_avr,s_avr,method\n";
    struct Row {
        std::size_t size, np;
        double t_avr, s_avr;
    };
    std::vector<Row> table;
    std::mt19937_64 rng(global.seed);

    bool failed = false;
    std::string failure_text;
    for (std::size_t size : sizes) {
        double t1 = 0.0;
        for (std::size_t np : workers_list) {
            std::vector<double> reps;
            try {
                for (int rep = 0; rep < 3; ++rep) {
                    SerialExecutor serial;
                    std::unique_ptr<WorkerPool> pool;
                    if (np > 1) pool = std::make_unique<WorkerPool>(np);
                    Executor& exec = pool ? static_cast<Executor&>(*pool) : serial;
                    auto outcome = run_poisson(method, size, 1e-5, series, np, exec,
                                               randomize ? &rng : nullptr);
                    reps.push_back(outcome.seconds_per_problem);
                }
            } catch (const SolverError& e) {
                failed = true;
                failure_text = e.what();
                break;
            }
            std::sort(reps.begin(), reps.end());
            const double t_avr = reps[1];  // median of 3
            if (np == 1) t1 = t_avr;
            const double s_avr = np == 1 ? 1.0 : t1 / t_avr;
            table.push_back({size, np, t_avr, s_avr});
            char line[160];
            std::snprintf(line, sizeof line, "%zu,%zu,%.6e,%.3f,%s\n", size, np, t_avr, s_avr,
                          method.c_str());
            csv << line;
        }
        if (failed) break;
    }
    if (failed) csv << "ERROR,,,," << failure_text << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << csv.str();
    }
    std::cout << csv.str();

    if (markdown) {
        std::cout << "\n| size | np | t_avr | s_avr | method |\n|---|---|---|---|---|\n";
        for (const auto& row : table) {
            char line[160];
            std::snprintf(line, sizeof line, "| %zu | %zu | %.6e | %.3f | %s |\n", row.size,
                          row.np, row.t_avr, row.s_avr, method.c_str());
            std::cout << line;
        }
    }
    return failed ? kExitSolver : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Batched tridiagonal sweep solver and Poisson benchmark front end"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--workers", global.workers, "worker count for threaded mode");
    app.add_option("--mode", global.mode, "execution mode")
        ->check(CLI::IsMember({"simulated", "threaded"}));
    app.add_option("--seed", global.seed, "seed for generated fixtures");
    app.add_flag("--verify", global.verify, "re-check solutions against the dense oracle");

    auto* solve = app.add_subcommand("solve", "solve a batch of right-hand sides from files");
    std::string matrix_path, rhs_path, partition_spec, out_path, stats_path;
    solve->add_option("--matrix", matrix_path, "matrix file")->required();
    solve->add_option("--rhs", rhs_path, "right-hand-side series file")->required();
    solve->add_option("--partition", partition_spec, "comma-separated boundary rows");
    solve->add_option("--out", out_path, "solution output file (default stdout)");
    solve->add_option("--stats", stats_path, "run stats JSON output file (default stderr)");

    auto* poisson_cmd = app.add_subcommand("poisson", "solve the model Poisson problem");
    std::string method = "fourier";
    std::size_t mesh_n = 64;
    double eps = 1e-5;
    std::size_t series = 1;
    poisson_cmd->add_option("--method", method, "fourier or adi")
        ->check(CLI::IsMember({"fourier", "adi"}));
    poisson_cmd->add_option("--n", mesh_n, "mesh cells per direction");
    poisson_cmd->add_option("--eps", eps, "target tolerance (adi)");
    poisson_cmd->add_option("--series", series, "number of problems in the series");

    auto* bench = app.add_subcommand("bench", "emit size/worker scaling table as CSV");
    std::string bench_method = "fourier";
    std::vector<std::size_t> bench_sizes{64};
    std::vector<std::size_t> bench_workers{1};
    std::size_t bench_series = 10;
    std::string bench_out;
    bool markdown = false;
    bool randomize = false;
    bench->add_option("--method", bench_method, "fourier or adi")
        ->check(CLI::IsMember({"fourier", "adi"}));
    bench->add_option("--sizes", bench_sizes, "mesh sizes")->delimiter(',');
    bench->add_option("--workers-list", bench_workers, "worker counts")->delimiter(',');
    bench->add_option("--series", bench_series, "series length per cell");
    bench->add_option("--out", bench_out, "also write the CSV to this file");
    bench->add_flag("--markdown", markdown, "render the table as markdown too");
    bench->add_flag("--randomize", randomize, "perturb each series member (seeded by --seed)");

    CLI11_PARSE(app, argc, argv);

    if (mesh_n < 2) {
        std::cerr << "parse error: --n must be >= 2\n";
        return kExitParse;
    }

    if (solve->parsed())
        return cmd_solve(global, matrix_path, rhs_path, partition_spec, out_path, stats_path);
    if (poisson_cmd->parsed()) return cmd_poisson(global, method, mesh_n, eps, series);
    if (bench->parsed())
        return cmd_bench(global, bench_method, bench_sizes, bench_workers, bench_series,
                         bench_out, markdown, randomize);
    return 0;
}
