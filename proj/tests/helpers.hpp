#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "parsweep/core/dense_oracle.hpp"
#include "parsweep/core/tridiag.hpp"
#include "parsweep/dichotomy/partition.hpp"

namespace testutil {

using parsweep::TridiagMatrix;

/// Strictly dominant random matrix: every row margin at least `margin`
/// times the off-diagonal mass, signs mixed.
inline TridiagMatrix random_dominant(std::mt19937_64& rng, std::size_t n, double margin = 0.05,
                                     bool allow_negative_offdiag = true) {
    std::uniform_real_distribution<double> mag(0.2, 1.0);
    std::uniform_real_distribution<double> slack(margin, 1.0);
    std::bernoulli_distribution coin(0.5);
    TridiagMatrix A;
    A.sub.resize(n - 1);
    A.super.resize(n - 1);
    A.diag.resize(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        A.sub[k] = mag(rng) * (allow_negative_offdiag && coin(rng) ? -1.0 : 1.0);
        A.super[k] = mag(rng) * (allow_negative_offdiag && coin(rng) ? -1.0 : 1.0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        if (i > 0) off += std::abs(A.sub[i - 1]);
        if (i + 1 < n) off += std::abs(A.super[i]);
        double b = off * (1.0 + slack(rng)) + 0.1;
        A.diag[i] = coin(rng) ? b : -b;
    }
    return A;
}

/// Dominant, nonsymmetric, and symmetrizable: paired off-diagonals keep a
/// common positive sign but differ in magnitude.
inline TridiagMatrix random_symmetrizable(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> mag(0.3, 1.0);
    std::uniform_real_distribution<double> slack(0.1, 0.8);
    TridiagMatrix A;
    A.sub.resize(n - 1);
    A.super.resize(n - 1);
    A.diag.resize(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        A.sub[k] = mag(rng);
        A.super[k] = mag(rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        if (i > 0) off += std::abs(A.sub[i - 1]);
        if (i + 1 < n) off += std::abs(A.super[i]);
        A.diag[i] = -(off * (1.0 + slack(rng)) + 0.1);
    }
    return A;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

/// Random strictly increasing interior boundaries.
inline parsweep::Partition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t p) {
    std::vector<std::size_t> all(n - 2);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 2;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(p);
    std::sort(all.begin(), all.end());
    return parsweep::Partition{n, all};
}

inline double rel_error(const std::vector<double>& got, const std::vector<double>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num = std::max(num, std::abs(got[i] - want[i]));
        den = std::max(den, std::abs(want[i]));
    }
    return den == 0.0 ? num : num / den;
}

}  // namespace testutil
