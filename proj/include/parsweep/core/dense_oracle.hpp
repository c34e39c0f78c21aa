#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/core/tridiag.hpp"

namespace parsweep {

/// Row-major dense matrix, just big enough for oracle work.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> a;  // n*n entries

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t order) : n(order), a(order * order, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static DenseMatrix from_tridiag(const TridiagMatrix& t) {
        DenseMatrix m(t.n());
        for (std::size_t i = 0; i < t.n(); ++i) {
            m.at(i, i) = t.diag[i];
            if (i > 0) m.at(i, i - 1) = t.lower(i);
            if (i + 1 < t.n()) m.at(i, i + 1) = t.upper(i);
        }
        return m;
    }
};

inline DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix r(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            double v = x.at(i, k);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

/// LU factorization with partial pivoting. Factor once, then solve any number
/// of right-hand sides; this is the ground-truth path for every accuracy
/// claim in the test suites.
class DenseLU {
public:
    explicit DenseLU(DenseMatrix m) : lu_(std::move(m)), perm_(lu_.n) {
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});
        factor();
    }

    explicit DenseLU(const TridiagMatrix& t) : DenseLU(DenseMatrix::from_tridiag(t)) {}

    std::size_t order() const { return lu_.n; }

    std::vector<double> solve(std::span<const double> f) const {
        const std::size_t n = lu_.n;
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = f[perm_[i]];
        // forward: L y = P f  (unit lower triangle)
        for (std::size_t i = 1; i < n; ++i) {
            double s = x[i];
            for (std::size_t j = 0; j < i; ++j) s -= lu_.at(i, j) * x[j];
            x[i] = s;
        }
        // backward: U x = y
        for (std::size_t i = n; i-- > 0;) {
            double s = x[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= lu_.at(i, j) * x[j];
            x[i] = s / lu_.at(i, i);
        }
        return x;
    }

    /// Row `i` of the inverse, via a transpose solve of the factorization:
    /// A^T w = e_i  <=>  w = (A^{-1})_{i,.}
    std::vector<double> inverse_row(std::size_t i) const {
        const std::size_t n = lu_.n;
        std::vector<double> w(n, 0.0);
        w[i] = 1.0;
        // forward: U^T z = e_i
        for (std::size_t r = 0; r < n; ++r) {
            double s = w[r];
            for (std::size_t j = 0; j < r; ++j) s -= lu_.at(j, r) * w[j];
            w[r] = s / lu_.at(r, r);
        }
        // backward: L^T v = z (unit diagonal)
        for (std::size_t r = n; r-- > 0;) {
            double s = w[r];
            for (std::size_t j = r + 1; j < n; ++j) s -= lu_.at(j, r) * w[j];
            w[r] = s;
        }
        // undo the row permutation: (P A)^{-1} picked up P on the right
        std::vector<double> row(n);
        for (std::size_t j = 0; j < n; ++j) row[perm_[j]] = w[j];
        return row;
    }

private:
    void factor() {
        const std::size_t n = lu_.n;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(lu_.at(i, k)) > std::abs(lu_.at(piv, k))) piv = i;
            if (std::abs(lu_.at(piv, k)) < 1e-300)
                throw Singular("dense elimination: rank-deficient at column " +
                               std::to_string(k));
            if (piv != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu_.at(piv, j), lu_.at(k, j));
                std::swap(perm_[piv], perm_[k]);
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                double m = lu_.at(i, k) / lu_.at(k, k);
                lu_.at(i, k) = m;
                for (std::size_t j = k + 1; j < n; ++j) lu_.at(i, j) -= m * lu_.at(k, j);
            }
        }
    }

    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
};

/// Independent ground-truth solver: dense Gaussian elimination with partial
/// pivoting. Shares no code with the sweep path on purpose.
inline std::vector<double> dense_oracle_solve(const TridiagMatrix& A, std::span<const double> f) {
    return DenseLU(A).solve(f);
}

inline DenseMatrix dense_inverse(const TridiagMatrix& A) {
    DenseLU lu(A);
    const std::size_t n = A.n();
    DenseMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = lu.inverse_row(i);
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = row[j];
    }
    return inv;
}

}  // namespace parsweep
