#include "jigsaw/polyomino.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>

namespace jigsaw {

namespace {

constexpr std::array<Coord, 4> kNeighbourSteps{{{-1, 0}, {0, 1}, {1, 0}, {0, -1}}};

Coord advance(Coord v, Heading h) {
    switch (h) {
        case Heading::east: return {v.row, v.col + 1};
        case Heading::south: return {v.row + 1, v.col};
        case Heading::west: return {v.row, v.col - 1};
        case Heading::north: return {v.row - 1, v.col};
    }
    return v;
}

Turn turn_between(Heading from, Heading to) {
    const int a = static_cast<int>(from);
    const int b = static_cast<int>(to);
    if (a == b) return Turn::straight;
    if (b == (a + 3) % 4) return Turn::concave;  // left turn: interior angle 90
    if (b == (a + 1) % 4) return Turn::convex;   // right turn: interior angle 270
    throw std::logic_error("border walk reverses direction");
}

// Dense bitmap over a rectangle of cells.
class CellGrid {
public:
    CellGrid(int min_row, int min_col, int rows, int cols)
        : min_row_(min_row), min_col_(min_col), rows_(rows), cols_(cols),
          bits_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

    bool inside(Coord c) const {
        return c.row >= min_row_ && c.row < min_row_ + rows_ && c.col >= min_col_ && c.col < min_col_ + cols_;
    }
    char get(Coord c) const { return inside(c) ? bits_[offset(c)] : 0; }
    void set(Coord c, char v) { bits_[offset(c)] = v; }

private:
    std::size_t offset(Coord c) const {
        return static_cast<std::size_t>(c.row - min_row_) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c.col - min_col_);
    }

    int min_row_, min_col_, rows_, cols_;
    std::vector<char> bits_;
};

void require_connected(const Polyomino& p) {
    if (p.empty()) throw std::invalid_argument("polyomino is empty");
    if (!p.is_connected()) throw std::invalid_argument("polyomino is not 4-connected");
}

// Components of the complement of p inside its bounding rectangle.
std::vector<std::pair<Polyomino, bool>> complement_components(const Polyomino& p) {
    require_connected(p);
    const BoundingRect rect = bounding_rect(p);
    CellGrid seen(rect.min_row, rect.min_col, rect.height(), rect.width());
    for (Coord c : p.cells()) seen.set(c, 1);
    std::vector<std::pair<Polyomino, bool>> out;
    for (int r = rect.min_row; r <= rect.max_row; ++r)
        for (int c = rect.min_col; c <= rect.max_col; ++c) {
            if (seen.get({r, c})) continue;
            std::vector<Coord> component;
            bool touches = false;
            std::deque<Coord> queue{{r, c}};
            seen.set({r, c}, 1);
            while (!queue.empty()) {
                const Coord cur = queue.front();
                queue.pop_front();
                component.push_back(cur);
                touches = touches || rect.on_boundary(cur);
                for (Coord d : kNeighbourSteps) {
                    const Coord nb{cur.row + d.row, cur.col + d.col};
                    if (seen.inside(nb) && !seen.get(nb)) {
                        seen.set(nb, 1);
                        queue.push_back(nb);
                    }
                }
            }
            out.emplace_back(Polyomino(std::move(component)), touches);
        }
    return out;
}

}  // namespace

Polyomino::Polyomino(std::vector<Coord> cells) : cells_(std::move(cells)) {
    std::ranges::sort(cells_);
    const auto dup = std::ranges::unique(cells_);
    cells_.erase(dup.begin(), dup.end());
}

bool Polyomino::contains(Coord c) const { return std::ranges::binary_search(cells_, c); }

bool Polyomino::is_connected() const {
    if (cells_.empty()) return false;
    std::vector<char> reached(cells_.size(), 0);
    std::vector<std::size_t> stack{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const Coord cur = cells_[stack.back()];
        stack.pop_back();
        for (Coord d : kNeighbourSteps) {
            const Coord nb{cur.row + d.row, cur.col + d.col};
            const auto it = std::ranges::lower_bound(cells_, nb);
            if (it == cells_.end() || *it != nb) continue;
            const auto idx = static_cast<std::size_t>(it - cells_.begin());
            if (reached[idx]) continue;
            reached[idx] = 1;
            ++count;
            stack.push_back(idx);
        }
    }
    return count == cells_.size();
}

Polyomino Polyomino::normalized() const {
    if (cells_.empty()) return {};
    const BoundingRect r = bounding_rect(*this);
    std::vector<Coord> shifted;
    shifted.reserve(cells_.size());
    for (Coord c : cells_) shifted.push_back({c.row - r.min_row, c.col - r.min_col});
    return Polyomino(std::move(shifted));
}

BoundingRect bounding_rect(const Polyomino& p) {
    if (p.empty()) throw std::invalid_argument("bounding rectangle of an empty polyomino");
    BoundingRect r{p.cells().front().row, p.cells().front().row, p.cells().front().col, p.cells().front().col};
    for (Coord c : p.cells()) {
        r.min_row = std::min(r.min_row, c.row);
        r.max_row = std::max(r.max_row, c.row);
        r.min_col = std::min(r.min_col, c.col);
        r.max_col = std::max(r.max_col, c.col);
    }
    return r;
}

BorderWalk trace_outer_border(const Polyomino& p) {
    require_connected(p);
    const BoundingRect rect = bounding_rect(p);
    // Padded by one cell so the outside region surrounds the shape.
    CellGrid occupied(rect.min_row - 1, rect.min_col - 1, rect.height() + 2, rect.width() + 2);
    CellGrid outside(rect.min_row - 1, rect.min_col - 1, rect.height() + 2, rect.width() + 2);
    for (Coord c : p.cells()) occupied.set(c, 1);
    std::deque<Coord> queue{{rect.min_row - 1, rect.min_col - 1}};
    outside.set(queue.front(), 1);
    while (!queue.empty()) {
        const Coord cur = queue.front();
        queue.pop_front();
        for (Coord d : kNeighbourSteps) {
            const Coord nb{cur.row + d.row, cur.col + d.col};
            if (outside.inside(nb) && !occupied.get(nb) && !outside.get(nb)) {
                outside.set(nb, 1);
                queue.push_back(nb);
            }
        }
    }

    // Directed unit segments with the interior on the left.
    std::map<Coord, Heading> next;
    const auto add = [&](Coord start, Heading h) {
        if (!next.emplace(start, h).second) throw std::logic_error("outer border vertex of degree > 2");
    };
    for (Coord c : p.cells()) {
        if (outside.get({c.row - 1, c.col})) add({c.row, c.col + 1}, Heading::west);
        if (outside.get({c.row + 1, c.col})) add({c.row + 1, c.col}, Heading::east);
        if (outside.get({c.row, c.col - 1})) add({c.row, c.col}, Heading::south);
        if (outside.get({c.row, c.col + 1})) add({c.row + 1, c.col + 1}, Heading::north);
    }

    BorderWalk walk;
    const Coord first = p.cells().front();  // top row, leftmost cell
    const Coord origin{first.row, first.col + 1};
    Coord at = origin;
    do {
        const auto it = next.find(at);
        if (it == next.end()) throw std::logic_error("outer border is not closed");
        walk.segments.push_back({at, it->second, Turn::straight});
        at = advance(at, it->second);
    } while (at != origin && walk.segments.size() <= next.size());
    if (walk.segments.size() != next.size()) throw std::logic_error("outer border is not a single cycle");

    const std::size_t len = walk.segments.size();
    for (std::size_t i = 0; i < len; ++i)
        walk.segments[i].turn = turn_between(walk.segments[(i + len - 1) % len].heading, walk.segments[i].heading);
    return walk;
}

CornerCensus corner_census(const BorderWalk& walk) {
    CornerCensus census;
    for (const BorderSegment& s : walk.segments) {
        census.concave += s.turn == Turn::concave;
        census.convex += s.turn == Turn::convex;
    }
    return census;
}

CornerCensus corner_census(const Polyomino& p) { return corner_census(trace_outer_border(p)); }

CornerCensus side_corner_census(const Polyomino& p, RectSide side) {
    const BorderWalk walk = trace_outer_border(p);
    const BoundingRect rect = bounding_rect(p);

    // Segments lying on the chosen side, with a key that increases in walk
    // order along that side.
    const auto on_side = [&](const BorderSegment& s) -> std::optional<int> {
        switch (side) {
            case RectSide::left:
                if (s.heading == Heading::south && s.start.col == rect.min_col) return s.start.row;
                break;
            case RectSide::bottom:
                if (s.heading == Heading::east && s.start.row == rect.max_row + 1) return s.start.col;
                break;
            case RectSide::right:
                if (s.heading == Heading::north && s.start.col == rect.max_col + 1) return -s.start.row;
                break;
            case RectSide::top:
                if (s.heading == Heading::west && s.start.row == rect.min_row) return -s.start.col;
                break;
        }
        return std::nullopt;
    };

    const std::size_t len = walk.segments.size();
    std::optional<std::size_t> first;
    std::optional<std::size_t> last;
    int first_key = 0;
    int last_key = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const auto key = on_side(walk.segments[i]);
        if (!key) continue;
        if (!first || *key < first_key) {
            first = i;
            first_key = *key;
        }
        if (!last || *key > last_key) {
            last = i;
            last_key = *key;
        }
    }
    if (!first) throw std::logic_error("border never touches a side of its bounding rectangle");

    // Vertices strictly between the two delimiting corners are the starts of
    // segments first+1 .. last.
    CornerCensus census;
    for (std::size_t i = (*first + 1) % len, steps = (*last + len - *first) % len; steps > 0;
         i = (i + 1) % len, --steps) {
        census.concave += walk.segments[i].turn == Turn::concave;
        census.convex += walk.segments[i].turn == Turn::convex;
    }
    return census;
}

bool satisfies_corner_lemma(const Polyomino& p) {
    const CornerCensus total = corner_census(p);
    if (total.concave - total.convex != 4) return false;
    for (RectSide side : {RectSide::left, RectSide::right, RectSide::top, RectSide::bottom}) {
        const CornerCensus part = side_corner_census(p, side);
        if (part.concave != part.convex) return false;
    }
    return true;
}

std::vector<Polyomino> find_holes(const Polyomino& p) {
    std::vector<Polyomino> out;
    for (auto& [component, touches] : complement_components(p))
        if (!touches) out.push_back(std::move(component));
    return out;
}

std::vector<Polyomino> find_indentations(const Polyomino& p) {
    std::vector<Polyomino> out;
    for (auto& [component, touches] : complement_components(p))
        if (touches) out.push_back(std::move(component));
    return out;
}

Polyomino fill_indentations(const Polyomino& p) {
    std::vector<Coord> cells = p.cells();
    for (const Polyomino& ind : find_indentations(p)) cells.insert(cells.end(), ind.cells().begin(), ind.cells().end());
    return Polyomino(std::move(cells));
}

namespace {

// Redelmeier's algorithm. Cells live in the half plane row > 0, or row == 0
// and col >= 0, so that (0,0) is the first cell of every polyomino it grows.
class Redelmeier {
public:
    explicit Redelmeier(int k)
        : k_(k), marked_(0, -(k - 1), k, 2 * k - 1), result_(static_cast<std::size_t>(k)) {}

    std::vector<std::vector<Polyomino>> run() {
        marked_.set({0, 0}, 1);
        grow({{0, 0}});
        for (auto& bucket : result_) std::ranges::sort(bucket);
        return std::move(result_);
    }

private:
    bool admissible(Coord c) const { return marked_.inside(c) && (c.row > 0 || (c.row == 0 && c.col >= 0)); }

    void grow(std::vector<Coord> untried) {
        while (!untried.empty()) {
            const Coord c = untried.back();
            untried.pop_back();
            current_.push_back(c);
            result_[current_.size() - 1].push_back(Polyomino(current_).normalized());
            if (static_cast<int>(current_.size()) < k_) {
                std::vector<Coord> added;
                for (Coord d : kNeighbourSteps) {
                    const Coord nb{c.row + d.row, c.col + d.col};
                    if (admissible(nb) && !marked_.get(nb)) {
                        marked_.set(nb, 1);
                        added.push_back(nb);
                    }
                }
                std::vector<Coord> next = untried;
                next.insert(next.end(), added.begin(), added.end());
                grow(std::move(next));
                for (Coord nb : added) marked_.set(nb, 0);
            }
            current_.pop_back();
        }
    }

    int k_;
    CellGrid marked_;
    std::vector<Coord> current_;
    std::vector<std::vector<Polyomino>> result_;
};

}  // namespace

std::vector<std::vector<Polyomino>> enumerate_fixed_polyominoes(int k) {
    if (k < 1 || k > 10) throw std::invalid_argument("enumeration size must be in 1..10");
    return Redelmeier(k).run();
}

}  // namespace jigsaw
