#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace parsweep::poisson {

/// Discrete sine transform (DST-I) on the N-1 interior points of a length-N
/// interval. With S[j][l] = sin(pi*j*l/N), the forward direction returns the
/// series coefficients u_tilde = (2/N) S u and the inverse reconstructs
/// u = S u_tilde; the pair is an identity because sum_j sin^2(pi*l*j/N) = N/2.
///
/// When N is a power of two the transform runs through a complex FFT of the
/// odd extension (O(N log N)); otherwise it falls back to direct summation.
enum class DstDirection { Forward, Inverse };

namespace detail {

/// Iterative radix-2 complex FFT over a power-of-two length, with a
/// precomputed twiddle table shared by all calls on the same plan.
class Radix2Fft {
public:
    Radix2Fft() = default;
    explicit Radix2Fft(std::size_t size) : size_(size) {
        twiddles_.resize(size_ / 2);
        for (std::size_t k = 0; k < size_ / 2; ++k) {
            double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / size_;
            twiddles_[k] = {std::cos(angle), std::sin(angle)};
        }
        bitrev_.resize(size_);
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < size_) ++bits;
        for (std::size_t i = 0; i < size_; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < bits; ++b)
                if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
            bitrev_[i] = r;
        }
    }

    std::size_t size() const { return size_; }

    void transform(std::complex<double>* data) const {
        for (std::size_t i = 0; i < size_; ++i) {
            std::size_t j = bitrev_[i];
            if (i < j) std::swap(data[i], data[j]);
        }
        for (std::size_t len = 2; len <= size_; len <<= 1) {
            const std::size_t half = len / 2;
            const std::size_t step = size_ / len;
            for (std::size_t start = 0; start < size_; start += len) {
                for (std::size_t k = 0; k < half; ++k) {
                    const std::complex<double> w = twiddles_[k * step];
                    std::complex<double>& a = data[start + k];
                    std::complex<double>& b = data[start + k + half];
                    const std::complex<double> t = w * b;
                    b = a - t;
                    a += t;
                }
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::vector<std::complex<double>> twiddles_;
    std::vector<std::size_t> bitrev_;
};

inline bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace detail

/// Per-call workspace; reuse one instance per worker to avoid allocations.
struct DstScratch {
    std::vector<std::complex<double>> buf;
};

/// Reusable transform plan for a fixed interval resolution N (operating on
/// vectors of length N-1).
class DstPlan {
public:
    DstPlan() = default;

    explicit DstPlan(std::size_t interval_n) : n_(interval_n) {
        if (detail::is_power_of_two(n_)) {
            fft_ = detail::Radix2Fft(2 * n_);
        } else {
            sines_.resize(n_);
            for (std::size_t j = 0; j < n_; ++j)
                sines_[j] = std::sin(std::numbers::pi * static_cast<double>(j) / n_);
        }
    }

    std::size_t interval_n() const { return n_; }
    std::size_t points() const { return n_ - 1; }

    /// out = S * in (the unnormalized sine sum).
    void apply_raw(std::span<const double> in, std::span<double> out, DstScratch& scratch) const {
        if (fft_.size() != 0) {
            auto& v = scratch.buf;
            v.assign(2 * n_, {0.0, 0.0});
            for (std::size_t j = 1; j < n_; ++j) {
                v[j] = {in[j - 1], 0.0};
                v[2 * n_ - j] = {-in[j - 1], 0.0};
            }
            fft_.transform(v.data());
            for (std::size_t l = 1; l < n_; ++l) out[l - 1] = -0.5 * v[l].imag();
            return;
        }
        for (std::size_t l = 1; l < n_; ++l) {
            double s = 0.0;
            for (std::size_t j = 1; j < n_; ++j) {
                const std::size_t m = (j * l) % (2 * n_);  // sin has period 2N with sign flip
                s += in[j - 1] * (m < n_ ? sines_[m] : -sines_[m - n_]);
            }
            out[l - 1] = s;
        }
    }

    /// Transforms two independent vectors with one complex FFT by packing
    /// them into the real and imaginary parts of the odd extension.
    void apply_raw_pair(std::span<const double> in_a, std::span<const double> in_b,
                        std::span<double> out_a, std::span<double> out_b,
                        DstScratch& scratch) const {
        if (fft_.size() == 0) {
            apply_raw(in_a, out_a, scratch);
            apply_raw(in_b, out_b, scratch);
            return;
        }
        auto& v = scratch.buf;
        v.assign(2 * n_, {0.0, 0.0});
        for (std::size_t j = 1; j < n_; ++j) {
            v[j] = {in_a[j - 1], in_b[j - 1]};
            v[2 * n_ - j] = {-in_a[j - 1], -in_b[j - 1]};
        }
        fft_.transform(v.data());
        // split the spectra of the packed real signals by conjugate symmetry
        for (std::size_t l = 1; l < n_; ++l) {
            const std::complex<double> x = v[l];
            const std::complex<double> y = std::conj(v[2 * n_ - l]);
            out_a[l - 1] = -0.25 * (x.imag() + y.imag());
            out_b[l - 1] = 0.25 * (x.real() - y.real());
        }
    }

    void apply(std::span<const double> in, std::span<double> out, DstDirection dir,
               DstScratch& scratch) const {
        apply_raw(in, out, scratch);
        if (dir == DstDirection::Forward) {
            const double scale = 2.0 / static_cast<double>(n_);
            for (double& v : out) v *= scale;
        }
    }

private:
    std::size_t n_ = 0;
    detail::Radix2Fft fft_;
    std::vector<double> sines_;
};

/// One-shot DST-I over the N-1 interior samples of a length-N interval.
inline std::vector<double> dst1(std::span<const double> values, DstDirection direction) {
    const std::size_t n = values.size() + 1;
    DstPlan plan(n);
    DstScratch scratch;
    std::vector<double> out(values.size());
    plan.apply(values, out, direction, scratch);
    return out;
}

}  // namespace parsweep::poisson
