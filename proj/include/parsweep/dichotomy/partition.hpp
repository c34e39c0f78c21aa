#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace parsweep {

/// Interior split points n_1 < n_2 < ... < n_p of an order-n system,
/// stored as 1-based row indices with 2 <= n_i <= n-1. The implied
/// sentinels are n_0 = 1 and n_{p+1} = n+1, so the half-open blocks
/// [n_{t}, n_{t+1}) tile 1..n exactly once and every closed sweep block
/// [n_t, n_{t+1}] has at least two rows.
struct Partition {
    std::size_t n = 0;
    std::vector<std::size_t> boundaries;  ///< 1-based, strictly increasing

    std::size_t p() const { return boundaries.size(); }

    /// Number of half-open blocks (p + 1).
    std::size_t blocks() const { return boundaries.size() + 1; }

    /// First row of half-open block t (1-based row index), t in [0, p].
    std::size_t block_begin(std::size_t t) const { return t == 0 ? 1 : boundaries[t - 1]; }

    /// One past the last row of half-open block t.
    std::size_t block_end(std::size_t t) const { return t == p() ? n + 1 : boundaries[t]; }

    void validate() const {
        if (n < 2) throw std::invalid_argument("Partition: order must be >= 2");
        std::size_t prev = 0;
        for (std::size_t b : boundaries) {
            if (b < 2 || b > n - 1)
                throw std::invalid_argument("Partition: boundary " + std::to_string(b) +
                                            " is not interior to 1.." + std::to_string(n));
            if (b <= prev)
                throw std::invalid_argument("Partition: boundaries must be strictly increasing");
            prev = b;
        }
    }

    /// Comma-separated boundary list ("4,8,12"); empty string for p = 0.
    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < boundaries.size(); ++i)
            out << (i ? "," : "") << boundaries[i];
        return out.str();
    }

    static Partition parse(std::size_t n, const std::string& text) {
        Partition part;
        part.n = n;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("Partition: bad boundary '" + item + "'");
            }
            if (used != item.size() || v < 0)
                throw std::invalid_argument("Partition: bad boundary '" + item + "'");
            part.boundaries.push_back(static_cast<std::size_t>(v));
        }
        part.validate();
        return part;
    }
};

}  // namespace parsweep
