#pragma once

#include <cstddef>
#include <vector>

namespace parsweep {

/// Binary-tree ordering of the p boundary positions: level i holds the
/// positions j = 2^(floor(log2 p) + 1 - i) * k, k = 1..2^i - 1, that are
/// <= p and not already assigned to an earlier level. Levels are pairwise
/// disjoint and union to {1..p}; computing one level splits the system into
/// independent segments for the next.
struct LevelSets {
    /// levels[m] lists 1-based boundary positions of level m+1, ascending.
    std::vector<std::vector<std::size_t>> levels;
};

inline LevelSets build_level_sets(std::size_t p) {
    std::size_t depth = 1;
    while ((std::size_t{1} << depth) <= p) ++depth;  // depth = floor(log2 p) + 1

    LevelSets sets;
    sets.levels.resize(depth);
    std::vector<bool> assigned(p + 1, false);
    for (std::size_t i = 1; i <= depth; ++i) {
        std::size_t stride = std::size_t{1} << (depth - i);
        auto& level = sets.levels[i - 1];
        for (std::size_t k = 1; k < (std::size_t{1} << i); ++k) {
            std::size_t j = stride * k;
            if (j > p) break;
            if (assigned[j]) continue;
            assigned[j] = true;
            level.push_back(j);
        }
    }
    return sets;
}

}  // namespace parsweep
