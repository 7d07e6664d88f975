#include "jigsaw/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jigsaw/rng.hpp"

namespace jigsaw {

namespace {

void require_dimensions(int n, int q) {
    if (n < 1) throw std::invalid_argument("grid side n must be at least 1, got " + std::to_string(n));
    if (q < 1) throw std::invalid_argument("colour count q must be at least 1, got " + std::to_string(q));
}

std::size_t horizontal_index(int n, int slot_row, int col) {
    if (slot_row < 0 || slot_row > n || col < 0 || col >= n)
        throw std::out_of_range("horizontal slot out of range");
    return static_cast<std::size_t>(slot_row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(col);
}

std::size_t vertical_index(int n, int row, int slot_col) {
    if (row < 0 || row >= n || slot_col < 0 || slot_col > n)
        throw std::out_of_range("vertical slot out of range");
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(slot_col);
}

}  // namespace

GridColoring::GridColoring(int n, int q) : n_(n), q_(q) {
    require_dimensions(n, q);
    const auto nn = static_cast<std::size_t>(n);
    horizontal_.assign((nn + 1) * nn, 0);
    vertical_.assign(nn * (nn + 1), 0);
}

GridColoring::GridColoring(int n, int q, std::vector<Color> horizontal, std::vector<Color> vertical)
    : n_(n), q_(q), horizontal_(std::move(horizontal)), vertical_(std::move(vertical)) {
    require_dimensions(n, q);
    const auto nn = static_cast<std::size_t>(n);
    if (horizontal_.size() != (nn + 1) * nn || vertical_.size() != nn * (nn + 1))
        throw std::invalid_argument("slot arrays do not match grid side " + std::to_string(n));
    const auto out_of_range = [q](Color c) { return c >= static_cast<Color>(q); };
    if (std::ranges::any_of(horizontal_, out_of_range) || std::ranges::any_of(vertical_, out_of_range))
        throw std::invalid_argument("colour id outside [0, q)");
}

Color GridColoring::horizontal(int slot_row, int col) const { return horizontal_[horizontal_index(n_, slot_row, col)]; }

Color GridColoring::vertical(int row, int slot_col) const { return vertical_[vertical_index(n_, row, slot_col)]; }

void GridColoring::set_horizontal(int slot_row, int col, Color c) {
    if (c >= static_cast<Color>(q_)) throw std::invalid_argument("colour id outside [0, q)");
    horizontal_[horizontal_index(n_, slot_row, col)] = c;
}

void GridColoring::set_vertical(int row, int slot_col, Color c) {
    if (c >= static_cast<Color>(q_)) throw std::invalid_argument("colour id outside [0, q)");
    vertical_[vertical_index(n_, row, slot_col)] = c;
}

Color GridColoring::color_at(Coord cell, Side s) const {
    switch (s) {
        case Side::top: return horizontal(cell.row, cell.col);
        case Side::right: return vertical(cell.row, cell.col + 1);
        case Side::bottom: return horizontal(cell.row + 1, cell.col);
        case Side::left: return vertical(cell.row, cell.col);
    }
    throw std::logic_error("bad side");
}

GridColoring generate_puzzle(int n, int q, std::uint64_t seed) {
    GridColoring gc(n, q);
    Rng rng(seed);
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c < n; ++c) gc.set_horizontal(r, c, static_cast<Color>(rng.below(static_cast<std::uint64_t>(q))));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= n; ++c) gc.set_vertical(r, c, static_cast<Color>(rng.below(static_cast<std::uint64_t>(q))));
    return gc;
}

PieceBag pieces_of(const GridColoring& gc) {
    PieceBag bag;
    bag.reserve(static_cast<std::size_t>(gc.n()) * static_cast<std::size_t>(gc.n()));
    for (int i = 0; i < gc.n(); ++i)
        for (int j = 0; j < gc.n(); ++j)
            bag.push_back({{i, j},
                           {gc.horizontal(i, j), gc.vertical(i, j + 1), gc.horizontal(i + 1, j), gc.vertical(i, j)}});
    return bag;
}

ColorTuple rotate_tuple(const ColorTuple& t, int r) {
    if (r < 0 || r > 3) throw std::invalid_argument("rotation index must be in 0..3, got " + std::to_string(r));
    ColorTuple out{};
    for (int d = 0; d < 4; ++d) out[static_cast<std::size_t>(d)] = shown_color(t, r, side_from_index(d));
    return out;
}

CanonicalPiece canonical_piece(const ColorTuple& t) {
    CanonicalPiece best{rotate_tuple(t, 0), 0, 1};
    int fixed = 0;  // rotations that leave t unchanged
    for (int r = 0; r < 4; ++r) {
        const ColorTuple shifted = rotate_tuple(t, r);
        if (shifted == t) ++fixed;
        if (shifted < best.canon) {
            best.canon = shifted;
            best.shift = r;
        }
    }
    best.symmetry_order = fixed;
    return best;
}

Assembly::Assembly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("assembly side must be at least 1");
    cells_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

Assembly::Assembly(int n, std::vector<Placement> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 1) throw std::invalid_argument("assembly side must be at least 1");
    if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("assembly needs n*n placements");
}

const Placement& Assembly::at(int row, int col) const {
    if (row < 0 || row >= n_ || col < 0 || col >= n_) throw std::out_of_range("assembly cell out of range");
    return cells_[static_cast<std::size_t>(row * n_ + col)];
}

Placement& Assembly::at(int row, int col) {
    if (row < 0 || row >= n_ || col < 0 || col >= n_) throw std::out_of_range("assembly cell out of range");
    return cells_[static_cast<std::size_t>(row * n_ + col)];
}

void Assembly::validate() const {
    std::vector<char> seen(cells_.size(), 0);
    for (const Placement& p : cells_) {
        if (p.rotation < 0 || p.rotation > 3) throw std::invalid_argument("rotation outside 0..3");
        if (p.label.row < 0 || p.label.row >= n_ || p.label.col < 0 || p.label.col >= n_)
            throw std::invalid_argument("label outside the grid");
        char& s = seen[static_cast<std::size_t>(p.label.row * n_ + p.label.col)];
        if (s) throw std::invalid_argument("label placed twice");
        s = 1;
    }
}

Assembly identity_assembly(int n) {
    Assembly a(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a.at(r, c) = {{r, c}, 0};
    return a;
}

Assembly rotate_assembly(const Assembly& a) {
    const int n = a.n();
    Assembly out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Placement& p = a.at(r, c);
            out.at(c, n - 1 - r) = {p.label, (p.rotation + 1) % 4};
        }
    return out;
}

EdgePairing edge_pairing(const Assembly& a) {
    const int n = a.n();
    EdgePairing ep;
    ep.pairs.reserve(static_cast<std::size_t>(2 * n * (n - 1)));
    ep.singles.reserve(static_cast<std::size_t>(4 * n));
    const auto facing = [&](int r, int c, Side dir) {
        const Placement& p = a.at(r, c);
        return HalfEdge{p.label, physical_side(p.rotation, dir)};
    };
    const auto add_pair = [&](HalfEdge x, HalfEdge y) {
        if (y < x) std::swap(x, y);
        ep.pairs.emplace_back(x, y);
    };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) add_pair(facing(r, c, Side::right), facing(r, c + 1, Side::left));
            if (r + 1 < n) add_pair(facing(r, c, Side::bottom), facing(r + 1, c, Side::top));
            if (r == 0) ep.singles.push_back(facing(r, c, Side::top));
            if (r == n - 1) ep.singles.push_back(facing(r, c, Side::bottom));
            if (c == 0) ep.singles.push_back(facing(r, c, Side::left));
            if (c == n - 1) ep.singles.push_back(facing(r, c, Side::right));
        }
    std::ranges::sort(ep.pairs);
    std::ranges::sort(ep.singles);
    return ep;
}

EdgePairing original_pairing(int n) { return edge_pairing(identity_assembly(n)); }

}  // namespace jigsaw
