#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "parsweep/core/errors.hpp"
#include "parsweep/dichotomy/partition.hpp"

namespace parsweep {

/// Contiguous row ranges assigning the unknowns, right-hand side entries and
/// matrix rows to p logical processor elements. Ranges tile 1..n with no
/// overlap, sizes differ by at most one and every range holds >= 2 rows, so
/// nothing is duplicated and row j always lives with (x_j, f_j).
struct Decomposition {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;  ///< 1-based closed [first, last]

    std::size_t p() const { return ranges.size(); }

    /// Interior split points: the right endpoints of all ranges but the last.
    Partition induced_partition() const {
        Partition part;
        part.n = n;
        for (std::size_t i = 0; i + 1 < ranges.size(); ++i)
            part.boundaries.push_back(ranges[i].second);
        return part;
    }
};

/// Near-equal split of n rows over p PEs. Throws TooManyPEs when n < 2p.
inline Decomposition decompose(std::size_t n, std::size_t p) {
    if (p == 0) throw TooManyPEs(n, p);
    if (n < 2 * p) throw TooManyPEs(n, p);
    Decomposition d;
    d.n = n;
    const std::size_t base = n / p;
    const std::size_t rem = n % p;
    std::size_t next = 1;
    for (std::size_t i = 0; i < p; ++i) {
        std::size_t size = base + (i < rem ? 1 : 0);
        d.ranges.emplace_back(next, next + size - 1);
        next += size;
    }
    return d;
}

}  // namespace parsweep
