#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parsweep/core/errors.hpp"

namespace parsweep {

/// Tridiagonal matrix in the general three-diagonal form
///
///   | b1 c1            |
///   | a2 b2 c2         |
///   |    a3 b3 c3      |
///   |        ...       |
///   |          an bn   |
///
/// stored as three vectors. Row i (1-based) holds sub[i-2], diag[i-1],
/// super[i-1] in 0-based storage, i.e. sub[k] is the entry below the
/// diagonal in row k+2 and super[k] the entry above it in row k+1.
/// Symmetry is a property of the values, never of the type.
struct TridiagMatrix {
    std::vector<double> sub;    ///< n-1 entries a2..an
    std::vector<double> diag;   ///< n entries b1..bn
    std::vector<double> super;  ///< n-1 entries c1..c(n-1)

    std::size_t n() const { return diag.size(); }

    /// Entry below the diagonal in 0-based row i (valid for i >= 1).
    double lower(std::size_t i) const { return sub[i - 1]; }
    /// Entry above the diagonal in 0-based row i (valid for i <= n-2).
    double upper(std::size_t i) const { return super[i]; }

    bool is_symmetric() const { return sub == super; }

    /// Constant-coefficient matrix tri(a, b, c) of order n.
    static TridiagMatrix constant(std::size_t n, double a, double b, double c) {
        TridiagMatrix m;
        m.sub.assign(n - 1, a);
        m.diag.assign(n, b);
        m.super.assign(n - 1, c);
        return m;
    }

    static TridiagMatrix identity(std::size_t n) { return constant(n, 0.0, 1.0, 0.0); }

    /// Enforces the type invariants: n >= 2, matching lengths, finite entries.
    void validate() const {
        if (n() < 2) throw std::invalid_argument("TridiagMatrix: order must be >= 2");
        if (sub.size() != n() - 1 || super.size() != n() - 1)
            throw std::invalid_argument("TridiagMatrix: off-diagonal lengths must be n-1");
        auto finite = [](const std::vector<double>& v) {
            return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
        };
        if (!finite(sub) || !finite(diag) || !finite(super))
            throw std::invalid_argument("TridiagMatrix: entries must be finite");
    }
};

/// y = A x.
inline std::vector<double> mat_vec(const TridiagMatrix& A, std::span<const double> x) {
    const std::size_t n = A.n();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = A.diag[i] * x[i];
        if (i > 0) s += A.lower(i) * x[i - 1];
        if (i + 1 < n) s += A.upper(i) * x[i + 1];
        y[i] = s;
    }
    return y;
}

/// Max row sum norm.
inline double norm_inf(const TridiagMatrix& A) {
    const std::size_t n = A.n();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = std::abs(A.diag[i]);
        if (i > 0) s += std::abs(A.lower(i));
        if (i + 1 < n) s += std::abs(A.upper(i));
        best = std::max(best, s);
    }
    return best;
}

inline double norm_inf(std::span<const double> v) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

/// Transpose (sub and super exchange roles).
inline TridiagMatrix transpose(const TridiagMatrix& A) {
    return TridiagMatrix{A.super, A.diag, A.sub};
}

namespace detail {

inline std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Line-oriented token reader that remembers line numbers for diagnostics.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::size_t line_number() const { return line_; }

    /// Reads the next non-empty line and splits it into doubles.
    std::vector<double> next_row(std::size_t expected, const char* what) {
        std::string text;
        while (std::getline(in_, text)) {
            ++line_;
            if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream row(text);
            std::vector<double> values;
            std::string tok;
            while (row >> tok) {
                try {
                    std::size_t used = 0;
                    double v = std::stod(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                    values.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError(line_, std::string("bad number '") + tok + "' in " + what);
                }
            }
            if (values.size() != expected)
                throw ParseError(line_, std::string(what) + ": expected " +
                                            std::to_string(expected) + " values, got " +
                                            std::to_string(values.size()));
            return values;
        }
        throw ParseError(line_ + 1, std::string("unexpected end of input reading ") + what);
    }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

}  // namespace detail

/// Writes the matrix text format: order, then the sub/diag/super rows with
/// full round-trip precision.
inline void write_matrix(std::ostream& out, const TridiagMatrix& A) {
    out << A.n() << "\n";
    auto row = [&out](const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? " " : "") << detail::format_full(v[i]);
        out << "\n";
    };
    row(A.sub);
    row(A.diag);
    row(A.super);
}

/// Parses the matrix text format; throws ParseError with the offending line.
inline TridiagMatrix read_matrix(std::istream& in) {
    detail::LineReader reader(in);
    auto header = reader.next_row(1, "matrix order");
    double order = header[0];
    if (order < 2 || order != std::floor(order) || order > 1e9)
        throw ParseError(reader.line_number(), "matrix order must be an integer >= 2");
    auto n = static_cast<std::size_t>(order);
    TridiagMatrix A;
    A.sub = reader.next_row(n - 1, "sub-diagonal row");
    A.diag = reader.next_row(n, "diagonal row");
    A.super = reader.next_row(n - 1, "super-diagonal row");
    A.validate();
    return A;
}

/// Writes a right-hand-side series: header `n N`, then N rows of n values.
inline void write_rhs_series(std::ostream& out, std::size_t n,
                             const std::vector<std::vector<double>>& series) {
    out << n << " " << series.size() << "\n";
    for (const auto& f : series) {
        for (std::size_t i = 0; i < f.size(); ++i)
            out << (i ? " " : "") << detail::format_full(f[i]);
        out << "\n";
    }
}

inline std::vector<std::vector<double>> read_rhs_series(std::istream& in, std::size_t expect_n) {
    detail::LineReader reader(in);
    auto header = reader.next_row(2, "rhs header");
    if (header[0] != static_cast<double>(expect_n))
        throw ParseError(reader.line_number(),
                         "rhs order " + std::to_string(static_cast<long long>(header[0])) +
                             " does not match matrix order " + std::to_string(expect_n));
    if (header[1] < 1 || header[1] != std::floor(header[1]))
        throw ParseError(reader.line_number(), "rhs count must be a positive integer");
    auto count = static_cast<std::size_t>(header[1]);
    std::vector<std::vector<double>> series;
    series.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        series.push_back(reader.next_row(expect_n, "rhs row"));
    return series;
}

}  // namespace parsweep
