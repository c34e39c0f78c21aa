#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "parsweep/core/dominance.hpp"
#include "parsweep/poisson/adi.hpp"
#include "parsweep/poisson/dst.hpp"
#include "parsweep/poisson/fourier.hpp"
#include "parsweep/poisson/grid2d.hpp"
#include "parsweep/poisson/model_problem.hpp"
#include "parsweep/runtime/thread_pool.hpp"

using namespace parsweep;
using namespace parsweep::poisson;

namespace {

constexpr double kPi = std::numbers::pi;

/// O(N^2) reference sine sum, independent of the planned transform.
std::vector<double> direct_sine_sum(std::span<const double> x, std::size_t n) {
    std::vector<double> out(x.size());
    for (std::size_t l = 1; l < n; ++l) {
        double s = 0.0;
        for (std::size_t j = 1; j < n; ++j)
            s += x[j - 1] * std::sin(kPi * static_cast<double>(j * l) / n);
        out[l - 1] = s;
    }
    return out;
}

}  // namespace

TEST_CASE("forward DST of a single eigenfunction is a unit coefficient") {
    const std::size_t n = 32;
    std::vector<double> samples(n - 1);
    for (std::size_t j = 1; j < n; ++j) samples[j - 1] = std::sin(kPi * 1.0 * j / n);
    auto coeff = dst1(samples, DstDirection::Forward);
    CHECK(coeff[0] == Catch::Approx(1.0).epsilon(1e-12));
    for (std::size_t l = 2; l < n; ++l) CHECK(std::abs(coeff[l - 1]) <= 1e-12);
}

TEST_CASE("DST round-trip is the identity") {
    std::mt19937_64 rng(3);
    for (std::size_t n : {64ul, 48ul, 17ul}) {  // FFT path and direct path
        auto x = testutil::random_vector(rng, n - 1);
        auto back = dst1(dst1(x, DstDirection::Forward), DstDirection::Inverse);
        CHECK(testutil::rel_error(back, x) <= 1e-12);
    }
}

TEST_CASE("planned transform agrees with the direct sine sum") {
    std::mt19937_64 rng(5);
    for (std::size_t n : {64ul, 100ul}) {
        auto x = testutil::random_vector(rng, n - 1);
        DstPlan plan(n);
        DstScratch scratch;
        std::vector<double> raw(n - 1);
        plan.apply_raw(x, raw, scratch);
        auto want = direct_sine_sum(x, n);
        REQUIRE(testutil::rel_error(raw, want) <= 1e-12);
    }
}

TEST_CASE("paired transform equals two single transforms") {
    std::mt19937_64 rng(7);
    const std::size_t n = 128;
    auto a = testutil::random_vector(rng, n - 1);
    auto b = testutil::random_vector(rng, n - 1);
    DstPlan plan(n);
    DstScratch scratch;
    std::vector<double> pa(n - 1), pb(n - 1), sa(n - 1), sb(n - 1);
    plan.apply_raw_pair(a, b, pa, pb, scratch);
    plan.apply_raw(a, sa, scratch);
    plan.apply_raw(b, sb, scratch);
    CHECK(testutil::rel_error(pa, sa) <= 1e-13);
    CHECK(testutil::rel_error(pb, sb) <= 1e-13);
}

TEST_CASE("DST of zero is zero") {
    std::vector<double> zeros(31, 0.0);
    for (double v : dst1(zeros, DstDirection::Forward)) CHECK(v == 0.0);
}

TEST_CASE("DST orthogonality: every eigenfunction maps to one coefficient") {
    const std::size_t n = 64;
    for (std::size_t mode : {1ul, 5ul, 33ul, 63ul}) {
        std::vector<double> samples(n - 1);
        for (std::size_t j = 1; j < n; ++j)
            samples[j - 1] = std::sin(kPi * static_cast<double>(mode * j) / n);
        auto coeff = dst1(samples, DstDirection::Forward);
        for (std::size_t l = 1; l < n; ++l) {
            if (l == mode)
                CHECK(coeff[l - 1] == Catch::Approx(1.0).epsilon(1e-11));
            else
                CHECK(std::abs(coeff[l - 1]) <= 1e-12);
        }
    }
}

TEST_CASE("model problem samples the documented values") {
    auto [f, exact] = model_problem(32, 32);
    for (std::size_t i = 0; i <= 32; ++i) {
        CHECK(exact.at(i, 0) == 0.0);
        CHECK(exact.at(i, 32) == 0.0);
        CHECK(exact.at(0, i) == 0.0);
        CHECK(exact.at(32, i) == 0.0);
    }
    CHECK(f.at(8, 8) == Catch::Approx(8.0 * kPi * kPi).epsilon(1e-13));
}

TEST_CASE("model problem truncation error is second order") {
    double previous = 0.0;
    for (std::size_t n : {16ul, 32ul, 64ul}) {
        auto [f, exact] = model_problem(n, n);
        double worst = 0.0;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j)
                worst = std::max(worst, std::abs(laplacian_at(exact, i, j) + f.at(i, j)));
        if (previous > 0.0) {
            const double ratio = previous / worst;
            CHECK(ratio > 3.5);
            CHECK(ratio < 4.5);
        }
        previous = worst;
    }
}

TEST_CASE("harmonic systems are strictly dominant with the documented shift") {
    for (std::size_t l : {1ul, 13ul, 31ul}) {
        auto sys = harmonic_system(32, 32, 1.0 / 32, 1.0 / 32, l);
        const double want = 4.0 * std::pow(std::sin(kPi * l / 64.0), 2.0);
        CHECK(sys.d_l == Catch::Approx(want).epsilon(1e-13));
        CHECK(sys.d_l > 0.0);
        auto rep = check_dominance(sys.matrix);
        CHECK(rep.dominant);
        CHECK(rep.strict_somewhere);
    }
}

TEST_CASE("fourier solve of zero is zero") {
    Grid2D f = Grid2D::unit_square(16);
    auto u = fourier_solve(f);
    for (double v : u.values) CHECK(v == 0.0);
}

TEST_CASE("fourier solve inverts a discrete eigenfunction exactly") {
    const std::size_t n = 32;
    const double h = 1.0 / n;
    const std::size_t k = 3, m = 5;
    Grid2D f(n, n, h, h);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            f.at(i, j) = std::sin(kPi * k * f.x(i)) * std::sin(kPi * m * f.y(j));
    const double lambda = 4.0 / (h * h) * std::pow(std::sin(kPi * k / (2.0 * n)), 2.0) +
                          4.0 / (h * h) * std::pow(std::sin(kPi * m / (2.0 * n)), 2.0);
    auto u = fourier_solve(f);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            REQUIRE(u.at(i, j) == Catch::Approx(f.at(i, j) / lambda).margin(1e-12));
}

TEST_CASE("fourier solve satisfies the discrete equations to near round-off") {
    auto [f, exact] = model_problem(64, 64);
    auto u = fourier_solve(f);
    double worst = 0.0;
    for (std::size_t i = 1; i < 64; ++i)
        for (std::size_t j = 1; j < 64; ++j)
            worst = std::max(worst, std::abs(laplacian_at(u, i, j) + f.at(i, j)));
    CHECK(worst <= 1e-9 * max_abs(f));
}

TEST_CASE("fourier solve converges at second order on the model problem") {
    double previous = 0.0;
    for (std::size_t n : {16ul, 32ul, 64ul, 128ul}) {
        auto [f, exact] = model_problem(n, n);
        auto u = fourier_solve(f);
        const double err = max_abs_diff(u, exact);
        if (previous > 0.0) {
            const double ratio = previous / err;
            CHECK(ratio > 3.5);
            CHECK(ratio < 4.5);
        }
        previous = err;
    }
}

TEST_CASE("fourier solve handles rectangular meshes") {
    const std::size_t n1 = 24, n2 = 40;
    auto f = Grid2D(n1, n2, 1.0 / n1, 1.0 / n2);
    auto exact = Grid2D(n1, n2, 1.0 / n1, 1.0 / n2);
    for (std::size_t i = 0; i <= n1; ++i)
        for (std::size_t j = 0; j <= n2; ++j) {
            const double s = std::sin(2.0 * kPi * f.x(i)) * std::sin(2.0 * kPi * f.y(j));
            exact.at(i, j) = s;
            f.at(i, j) = 8.0 * kPi * kPi * s;
        }
    auto u = fourier_solve(f);
    CHECK(max_abs_diff(u, exact) < 0.05);
    double worst = 0.0;
    for (std::size_t i = 1; i < n1; ++i)
        for (std::size_t j = 1; j < n2; ++j)
            worst = std::max(worst, std::abs(laplacian_at(u, i, j) + f.at(i, j)));
    CHECK(worst <= 1e-9 * max_abs(f));
}

TEST_CASE("fourier workspace with dichotomy splitting matches the plain path bitwise") {
    auto [f, exact] = model_problem(64, 64);
    FourierWorkspace plain(64, 64, f.h1, f.h2, 1);
    auto u_plain = fourier_solve(f, plain);

    FourierWorkspace split(64, 64, f.h1, f.h2, 4);
    REQUIRE(split.partition().p() == 3);
    auto u_split = fourier_solve(f, split);
    CHECK(max_abs_diff(u_plain, u_split) <= 1e-11);

    WorkerPool pool(4);
    auto u_threaded = fourier_solve(f, split, pool);
    CHECK(u_threaded.values == u_split.values);  // bitwise across schedules
}

TEST_CASE("adi iteration bound evaluates the documented cases") {
    CHECK(adi_iteration_bound(512, 1e-5) == 17);
    CHECK(adi_iteration_bound(128, 1e-5) == 14);
    CHECK(adi_iteration_bound(64, 4.0) == 0);
}

TEST_CASE("adi parameters form an increasing geometric set in range") {
    const std::size_t n = 128;
    const double h = 1.0 / n;
    const double lmin = 4.0 / (h * h) * std::pow(std::sin(kPi / (2.0 * n)), 2.0);
    const double lmax = 4.0 / (h * h) * std::pow(std::cos(kPi / (2.0 * n)), 2.0);

    auto single = adi_parameters(n, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Catch::Approx(1.0 / std::sqrt(lmin * lmax)).epsilon(1e-12));

    auto taus = adi_parameters(n, 9);
    for (std::size_t j = 0; j < taus.size(); ++j) {
        CHECK(taus[j] >= 1.0 / lmax);
        CHECK(taus[j] <= 1.0 / lmin);
        if (j > 0) CHECK(taus[j] > taus[j - 1]);
    }
}

TEST_CASE("adi solve of the zero problem returns zero in one iteration") {
    Grid2D f = Grid2D::unit_square(16);
    Grid2D u0 = Grid2D::unit_square(16);
    AdiWorkspace ws(16, 16, f.h1, f.h2, adi_iteration_bound(16, 1e-5));
    auto result = adi_solve(f, 1e-5, u0, ws);
    CHECK(result.iterations == 1);
    for (double v : result.u.values) CHECK(v == 0.0);
}

TEST_CASE("adi meets the iteration bound with the exact-error criterion") {
    // the error criterion measures iteration error, i.e. distance to the
    // solution of the difference problem; the direct solver provides it
    for (std::size_t n : {64ul, 128ul}) {
        const double eps = 1e-5;
        const std::size_t n0 = adi_iteration_bound(n, eps);
        auto [f, exact] = model_problem(n, n);
        const Grid2D discrete = fourier_solve(f);
        Grid2D u0(n, n, f.h1, f.h2);
        AdiWorkspace ws(n, n, f.h1, f.h2, n0);
        auto result = adi_solve(f, eps, u0, ws, serial_executor(), &discrete);
        INFO("n=" << n << " iterations=" << result.iterations << " bound=" << n0 + 2);
        CHECK(result.iterations <= n0 + 2);
        CHECK(max_abs_diff(result.u, discrete) <= eps * max_abs(discrete));
    }
}

TEST_CASE("adi error decreases strictly across full parameter cycles") {
    const std::size_t n = 64;
    const std::size_t n0 = 4;  // deliberately short cycle
    auto [f, exact] = model_problem(n, n);
    const Grid2D discrete = fourier_solve(f);
    AdiWorkspace ws(n, n, f.h1, f.h2, n0);
    AdiIteration iteration(ws, f);

    Grid2D u(n, n, f.h1, f.h2);
    double prev_err = max_abs_diff(u, discrete);
    std::size_t k = 0;
    for (int cycle = 0; cycle < 4; ++cycle) {
        for (std::size_t j = 0; j < n0; ++j) iteration.step(u, k++);
        const double err = max_abs_diff(u, discrete);
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("adi solve agrees with the fourier solution") {
    const std::size_t n = 64;
    auto [f, exact] = model_problem(n, n);
    auto u_fourier = fourier_solve(f);
    Grid2D u0(n, n, f.h1, f.h2);
    AdiWorkspace ws(n, n, f.h1, f.h2, adi_iteration_bound(n, 1e-7));
    auto result = adi_solve(f, 1e-7, u0, ws);
    CHECK(max_abs_diff(result.u, u_fourier) <= 1e-5);
}

TEST_CASE("adi nonconvergence surfaces as an error") {
    // a one-parameter cycle cannot reach an extreme tolerance in 10 steps
    const std::size_t n = 32;
    auto [f, exact] = model_problem(n, n);
    Grid2D u0(n, n, f.h1, f.h2);
    AdiWorkspace ws(n, n, f.h1, f.h2, 1);
    CHECK_THROWS_AS(adi_solve(f, 1e-300, u0, ws), NonConvergence);
}

TEST_CASE("grid text format round-trips") {
    auto [f, exact] = model_problem(8, 8);
    std::ostringstream out;
    write_grid(out, f);
    std::istringstream in(out.str());
    auto back = read_grid(in);
    CHECK(back.n1 == f.n1);
    CHECK(back.n2 == f.n2);
    CHECK(back.h1 == f.h1);
    CHECK(back.h2 == f.h2);
    CHECK(back.values == f.values);
}
