#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "jigsaw/core.hpp"
#include "jigsaw/rng.hpp"

namespace testutil {

/// Uniformly random placement: shuffled labels, random rotations.
inline jigsaw::Assembly random_assembly(int n, jigsaw::Rng& rng) {
    std::vector<jigsaw::Placement> cells;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) cells.push_back({{r, c}, static_cast<int>(rng.below(4))});
    for (std::size_t i = cells.size(); i > 1; --i) std::swap(cells[i - 1], cells[rng.below(i)]);
    return jigsaw::Assembly(n, std::move(cells));
}

/// A 2x2 puzzle whose 12 slots carry 12 distinct colours, relabelled by a
/// permutation drawn from `rng`.
inline jigsaw::GridColoring distinct_2x2(jigsaw::Rng& rng) {
    std::vector<jigsaw::Color> ids(12);
    std::iota(ids.begin(), ids.end(), 0U);
    for (std::size_t i = ids.size(); i > 1; --i) std::swap(ids[i - 1], ids[rng.below(i)]);
    return jigsaw::GridColoring(2, 12, {ids.begin(), ids.begin() + 6}, {ids.begin() + 6, ids.end()});
}

}  // namespace testutil
