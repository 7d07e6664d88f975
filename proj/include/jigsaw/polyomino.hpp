#pragma once

// Rectilinear geometry of connected cell sets.
//
// NOTE on corner names: this module follows the convention of the jigsaw
// literature, which inverts everyday usage. A corner whose interior angle is
// 90 degrees is CONCAVE; a corner whose interior angle is 270 degrees is
// CONVEX. A single cell therefore has four concave corners and no convex one.
//
// Cells are (row, col) with rows growing downwards. Border vertices are
// lattice points, also stored as Coord: vertex (r, c) is the top-left corner
// of cell (r, c). Complements are split with 4-connectivity, like the sets
// themselves.

#include <cstdint>
#include <vector>

#include "jigsaw/core.hpp"

namespace jigsaw {

class Polyomino {
public:
    Polyomino() = default;
    /// Sorts and deduplicates; connectivity is checked by the operations.
    explicit Polyomino(std::vector<Coord> cells);

    const std::vector<Coord>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    bool contains(Coord c) const;
    bool is_connected() const;

    /// Translated so that the minimum row and column are 0.
    Polyomino normalized() const;

    bool operator==(const Polyomino&) const = default;
    auto operator<=>(const Polyomino&) const = default;

private:
    std::vector<Coord> cells_;
};

struct BoundingRect {
    int min_row = 0;
    int max_row = 0;
    int min_col = 0;
    int max_col = 0;

    int height() const noexcept { return max_row - min_row + 1; }
    int width() const noexcept { return max_col - min_col + 1; }
    bool contains(Coord c) const noexcept {
        return c.row >= min_row && c.row <= max_row && c.col >= min_col && c.col <= max_col;
    }
    bool on_boundary(Coord c) const noexcept {
        return c.row == min_row || c.row == max_row || c.col == min_col || c.col == max_col;
    }
};

/// Throws std::invalid_argument for an empty polyomino.
BoundingRect bounding_rect(const Polyomino& p);

/// Headings in clockwise order as seen on screen.
enum class Heading : std::uint8_t { east = 0, south = 1, west = 2, north = 3 };

enum class Turn : std::uint8_t { straight, concave, convex };

struct BorderSegment {
    Coord start;  ///< lattice vertex where the unit segment begins
    Heading heading = Heading::east;
    Turn turn = Turn::straight;  ///< turn taken at `start`, coming from the previous segment
};

/// Closed counter-clockwise walk around the outer border (interior on the
/// left), beginning with the top edge of the leftmost cell of the top row.
struct BorderWalk {
    std::vector<BorderSegment> segments;
};

struct CornerCensus {
    int concave = 0;
    int convex = 0;
    bool operator==(const CornerCensus&) const = default;
};

enum class RectSide { left, right, top, bottom };

/// Throws std::invalid_argument for empty or disconnected input.
BorderWalk trace_outer_border(const Polyomino& p);

CornerCensus corner_census(const Polyomino& p);
CornerCensus corner_census(const BorderWalk& walk);

/// Turns on the border part matching one side of the bounding rectangle:
/// from the first to the last point where the walk runs along that side (in
/// walk order), both delimiting corners excluded. For the left side these are
/// the top-left and bottom-left corners; for the right side the right-bottom
/// and right-top corners.
CornerCensus side_corner_census(const Polyomino& p, RectSide side);

/// Both corner-accounting facts: concave - convex == 4 on the outer border,
/// and equal concave and convex counts on each of the four side parts.
bool satisfies_corner_lemma(const Polyomino& p);

/// 4-connected components of (bounding rectangle minus p) that do not touch
/// the rectangle boundary.
std::vector<Polyomino> find_holes(const Polyomino& p);

/// 4-connected components of (bounding rectangle minus p) that touch the
/// rectangle boundary.
std::vector<Polyomino> find_indentations(const Polyomino& p);

/// p together with all of its indentations.
Polyomino fill_indentations(const Polyomino& p);

/// All fixed polyominoes with 1..k cells, result[s-1] holding size s, each
/// normalized and sorted. Redelmeier's algorithm; k must be in 1..10.
std::vector<std::vector<Polyomino>> enumerate_fixed_polyominoes(int k);

}  // namespace jigsaw
