#pragma once

// Puzzle data model: colourings of the n x n grid, labelled pieces, rotations,
// placements and the half-edge pairings they induce.
//
// Rotation convention (used everywhere in the library):
//   A piece's tuple lists its colours as (top, right, bottom, left) in its
//   original orientation. Rotation r in {0,1,2,3} turns the physical piece
//   clockwise by 90*r degrees. The colour shown in direction d (same indexing)
//   is tuple[(d - r) mod 4], and the physical side facing direction d is
//   side (d - r) mod 4.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace jigsaw {

using Color = std::uint32_t;
using ColorTuple = std::array<Color, 4>;

enum class Side : std::uint8_t { top = 0, right = 1, bottom = 2, left = 3 };

constexpr int side_index(Side s) noexcept { return static_cast<int>(s); }
constexpr Side side_from_index(int i) noexcept { return static_cast<Side>(((i % 4) + 4) % 4); }
constexpr Side opposite(Side s) noexcept { return side_from_index(side_index(s) + 2); }

/// Grid coordinate (row grows downwards). Also used as a piece label: the
/// coordinate the piece occupied in the original puzzle.
struct Coord {
    int row = 0;
    int col = 0;
    auto operator<=>(const Coord&) const = default;
};

/// Neighbouring coordinate in direction `s`.
constexpr Coord step(Coord c, Side s) noexcept {
    switch (s) {
        case Side::top: return {c.row - 1, c.col};
        case Side::right: return {c.row, c.col + 1};
        case Side::bottom: return {c.row + 1, c.col};
        case Side::left: return {c.row, c.col - 1};
    }
    return c;
}

/// A coloured n x n puzzle. Horizontal slots form an (n+1) x n array where
/// slot row r lies above piece row r (row n is the bottom border); vertical
/// slots form an n x (n+1) array where slot column c lies left of piece
/// column c (column n is the right border).
class GridColoring {
public:
    GridColoring(int n, int q);
    GridColoring(int n, int q, std::vector<Color> horizontal, std::vector<Color> vertical);

    int n() const noexcept { return n_; }
    int q() const noexcept { return q_; }
    std::size_t slot_count() const noexcept { return horizontal_.size() + vertical_.size(); }

    Color horizontal(int slot_row, int col) const;
    Color vertical(int row, int slot_col) const;
    void set_horizontal(int slot_row, int col, Color c);
    void set_vertical(int row, int slot_col, Color c);

    std::span<const Color> horizontal_slots() const noexcept { return horizontal_; }
    std::span<const Color> vertical_slots() const noexcept { return vertical_; }

    /// Colour of the slot carrying side `s` of the piece at `cell`.
    Color color_at(Coord cell, Side s) const;

    bool operator==(const GridColoring&) const = default;

private:
    int n_;
    int q_;
    std::vector<Color> horizontal_;
    std::vector<Color> vertical_;
};

struct Piece {
    Coord label;
    ColorTuple tuple{};
    bool operator==(const Piece&) const = default;
};

using PieceBag = std::vector<Piece>;

/// Draws every slot independently and uniformly from [0, q). Slots are drawn
/// horizontal-first in row-major order, then vertical in row-major order, from
/// Rng(seed).
GridColoring generate_puzzle(int n, int q, std::uint64_t seed);

/// The n^2 pieces in row-major label order; piece (i,j) has tuple
/// (h[i][j], v[i][j+1], h[i+1][j], v[i][j]).
PieceBag pieces_of(const GridColoring& gc);

/// Colours shown in directions (top, right, bottom, left) after rotation r.
ColorTuple rotate_tuple(const ColorTuple& t, int r);

constexpr Color shown_color(const ColorTuple& t, int rotation, Side direction) noexcept {
    return t[static_cast<std::size_t>(((side_index(direction) - rotation) % 4 + 4) % 4)];
}

constexpr Side physical_side(int rotation, Side direction) noexcept {
    return side_from_index(side_index(direction) - rotation);
}

struct CanonicalPiece {
    ColorTuple canon{};
    int shift = 0;           ///< smallest r with rotate_tuple(t, r) == canon
    int symmetry_order = 1;  ///< 1, 2 or 4
};

CanonicalPiece canonical_piece(const ColorTuple& t);

struct Placement {
    Coord label;
    int rotation = 0;
    auto operator<=>(const Placement&) const = default;
};

/// Position -> (label, rotation), row-major. Must be a bijection onto the
/// labels of an n x n bag; validate() checks this.
class Assembly {
public:
    explicit Assembly(int n);
    Assembly(int n, std::vector<Placement> cells);

    int n() const noexcept { return n_; }
    const Placement& at(int row, int col) const;
    Placement& at(int row, int col);
    std::span<const Placement> cells() const noexcept { return cells_; }

    /// Throws std::invalid_argument unless every label (i,j) with
    /// 0 <= i,j < n appears exactly once and all rotations are in 0..3.
    void validate() const;

    bool operator==(const Assembly&) const = default;

private:
    int n_;
    std::vector<Placement> cells_;
};

/// Every piece at its original cell with rotation 0.
Assembly identity_assembly(int n);

/// The whole assembly turned clockwise by 90 degrees: cell (r,c) moves to
/// (c, n-1-r) and every rotation increases by one.
Assembly rotate_assembly(const Assembly& a);

/// A physical side of a labelled piece.
struct HalfEdge {
    Coord label;
    Side side = Side::top;
    auto operator<=>(const HalfEdge&) const = default;
};

/// The half-edge adjacent to `h` in the original grid (it may lie outside the
/// grid for border half-edges).
constexpr HalfEdge partner(const HalfEdge& h) noexcept { return {step(h.label, h.side), opposite(h.side)}; }

/// Sorted, normalised (first < second) internal pairs and sorted border singles.
struct EdgePairing {
    std::vector<std::pair<HalfEdge, HalfEdge>> pairs;
    std::vector<HalfEdge> singles;
    bool operator==(const EdgePairing&) const = default;
};

EdgePairing edge_pairing(const Assembly& a);

/// The pairing of the original grid, i.e. edge_pairing(identity_assembly(n)).
EdgePairing original_pairing(int n);

}  // namespace jigsaw
