#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <array>
#include <set>

#include "jigsaw/polyomino.hpp"

using namespace jigsaw;

namespace {

Polyomino poly(std::vector<Coord> cells) { return Polyomino(std::move(cells)); }

// Growth oracle: every fixed polyomino of size s+1 is some size-s polyomino
// plus one neighbouring cell.
std::vector<std::set<Polyomino>> grow_all(int k) {
    std::vector<std::set<Polyomino>> out(static_cast<std::size_t>(k));
    out[0].insert(poly({{0, 0}}));
    for (int s = 1; s < k; ++s)
        for (const Polyomino& p : out[static_cast<std::size_t>(s - 1)])
            for (Coord c : p.cells())
                for (Coord d : {Coord{c.row - 1, c.col}, Coord{c.row + 1, c.col}, Coord{c.row, c.col - 1},
                                Coord{c.row, c.col + 1}}) {
                    if (p.contains(d)) continue;
                    std::vector<Coord> cells = p.cells();
                    cells.push_back(d);
                    out[static_cast<std::size_t>(s)].insert(poly(cells).normalized());
                }
    return out;
}

// p with every complement cell not reachable from outside the bounding box.
std::set<Coord> fill_holes_oracle(const Polyomino& p) {
    const BoundingRect r = bounding_rect(p);
    std::set<Coord> outside;
    std::vector<Coord> stack{{r.min_row - 1, r.min_col - 1}};
    outside.insert(stack.back());
    while (!stack.empty()) {
        const Coord c = stack.back();
        stack.pop_back();
        for (Coord d : {Coord{c.row - 1, c.col}, Coord{c.row + 1, c.col}, Coord{c.row, c.col - 1},
                        Coord{c.row, c.col + 1}}) {
            if (d.row < r.min_row - 1 || d.row > r.max_row + 1 || d.col < r.min_col - 1 || d.col > r.max_col + 1)
                continue;
            if (p.contains(d) || outside.contains(d)) continue;
            outside.insert(d);
            stack.push_back(d);
        }
    }
    std::set<Coord> filled;
    for (int row = r.min_row; row <= r.max_row; ++row)
        for (int col = r.min_col; col <= r.max_col; ++col)
            if (!outside.contains({row, col})) filled.insert({row, col});
    return filled;
}

// Corners read off lattice vertices: one filled cell around a vertex is a 90
// degree corner, three filled cells a 270 degree corner.
CornerCensus vertex_census(const Polyomino& p) {
    const std::set<Coord> filled = fill_holes_oracle(p);
    const BoundingRect r = bounding_rect(p);
    CornerCensus out;
    for (int vr = r.min_row; vr <= r.max_row + 1; ++vr)
        for (int vc = r.min_col; vc <= r.max_col + 1; ++vc) {
            const std::array<bool, 4> q{filled.contains({vr - 1, vc - 1}), filled.contains({vr - 1, vc}),
                                        filled.contains({vr, vc - 1}), filled.contains({vr, vc})};
            const int k = q[0] + q[1] + q[2] + q[3];
            if (k == 1) ++out.concave;
            if (k == 3) ++out.convex;
            if (k == 2) CHECK(q[0] != q[3]);  // no pinch points after filling holes
        }
    return out;
}

const std::vector<std::size_t> kFixedCounts{1, 2, 6, 19, 63, 216, 760, 2725, 9910, 36446};

}  // namespace

TEST_CASE("Polyomino basics") {
    const Polyomino p = poly({{1, 1}, {0, 0}, {0, 1}, {0, 0}});
    CHECK(p.size() == 3);
    CHECK(p.cells().front() == Coord{0, 0});
    CHECK(p.is_connected());
    CHECK_FALSE(poly({{0, 0}, {1, 1}}).is_connected());
    CHECK(poly({{5, 7}, {6, 7}}).normalized() == poly({{0, 0}, {1, 0}}));
    const BoundingRect r = bounding_rect(poly({{2, 3}, {2, 4}, {3, 4}}));
    CHECK(r.height() == 2);
    CHECK(r.width() == 2);
    CHECK_THROWS_AS(bounding_rect(Polyomino{}), std::invalid_argument);
}

TEST_CASE("trace_outer_border examples") {
    const BorderWalk cell = trace_outer_border(poly({{0, 0}}));
    CHECK(cell.segments.size() == 4);
    CHECK(corner_census(cell) == CornerCensus{4, 0});
    CHECK(cell.segments.front().start == Coord{0, 1});
    CHECK(cell.segments.front().heading == Heading::west);

    std::vector<Coord> rect;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) rect.push_back({r, c});
    const BorderWalk rw = trace_outer_border(poly(rect));
    CHECK(rw.segments.size() == 10);
    CHECK(corner_census(rw) == CornerCensus{4, 0});

    CHECK(corner_census(poly({{0, 0}, {1, 0}, {0, 1}})) == CornerCensus{5, 1});
    CHECK(corner_census(poly({{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}})) == CornerCensus{8, 4});

    CHECK_THROWS_AS(trace_outer_border(poly({{0, 0}, {2, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(trace_outer_border(Polyomino{}), std::invalid_argument);
}

TEST_CASE("border walks are closed counter-clockwise cycles") {
    for (const auto& size : enumerate_fixed_polyominoes(6))
        for (const Polyomino& p : size) {
            const auto& segs = trace_outer_border(p).segments;
            int left = 0;
            int right = 0;
            for (std::size_t i = 0; i < segs.size(); ++i) {
                const BorderSegment& s = segs[i];
                const BorderSegment& next = segs[(i + 1) % segs.size()];
                Coord end = s.start;
                switch (s.heading) {
                    case Heading::east: ++end.col; break;
                    case Heading::south: ++end.row; break;
                    case Heading::west: --end.col; break;
                    case Heading::north: --end.row; break;
                }
                CHECK(end == next.start);
                const int delta = (static_cast<int>(next.heading) - static_cast<int>(s.heading) + 4) % 4;
                CHECK(delta != 2);
                left += delta == 3;
                right += delta == 1;
                CHECK((delta == 0) == (next.turn == Turn::straight));
            }
            CHECK(left - right == 4);
        }
}

TEST_CASE("hole border is ignored") {
    std::vector<Coord> ring;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (r != 1 || c != 1) ring.push_back({r, c});
    CHECK(corner_census(poly(ring)) == CornerCensus{4, 0});
    CHECK(trace_outer_border(poly(ring)).segments.size() == 12);
}

TEST_CASE("enumerate_fixed_polyominoes counts") {
    const auto all = enumerate_fixed_polyominoes(10);
    REQUIRE(all.size() == 10);
    for (std::size_t s = 0; s < 10; ++s) CHECK(all[s].size() == kFixedCounts[s]);
    CHECK_THROWS_AS(enumerate_fixed_polyominoes(11), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_fixed_polyominoes(0), std::invalid_argument);
}

TEST_CASE("enumeration matches the growth oracle") {
    const auto fast = enumerate_fixed_polyominoes(8);
    const auto slow = grow_all(8);
    for (std::size_t s = 0; s < 8; ++s) {
        CHECK(std::set<Polyomino>(fast[s].begin(), fast[s].end()) == slow[s]);
        CHECK(std::is_sorted(fast[s].begin(), fast[s].end()));
        for (const Polyomino& p : fast[s]) {
            CHECK(p == p.normalized());
            CHECK(p.is_connected());
        }
    }
}

TEST_CASE("corner census matches vertex counting on every polyomino up to size 8") {
    for (const auto& size : enumerate_fixed_polyominoes(8))
        for (const Polyomino& p : size) {
            const CornerCensus c = corner_census(p);
            CHECK(c == vertex_census(p));
            CHECK(c.concave - c.convex == 4);
        }
}

TEST_CASE("side census") {
    std::vector<Coord> rect;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) rect.push_back({r, c});
    for (RectSide s : {RectSide::left, RectSide::right, RectSide::top, RectSide::bottom})
        CHECK(side_corner_census(poly(rect), s) == CornerCensus{0, 0});

    const Polyomino l = poly({{0, 0}, {1, 0}, {0, 1}});
    CHECK(side_corner_census(l, RectSide::left) == CornerCensus{0, 0});
    CHECK(side_corner_census(l, RectSide::bottom) == CornerCensus{0, 0});
    CHECK(side_corner_census(l, RectSide::right) == CornerCensus{0, 0});

    const Polyomino c = poly({{0, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}});
    CHECK(side_corner_census(c, RectSide::left) == CornerCensus{2, 2});
    CHECK(side_corner_census(c, RectSide::right) == CornerCensus{0, 0});

    const Polyomino u = poly({{0, 0}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
    CHECK(side_corner_census(u, RectSide::top) == CornerCensus{2, 2});
    CHECK(side_corner_census(u, RectSide::bottom) == CornerCensus{0, 0});
}

TEST_CASE("side census is balanced on every polyomino up to size 8") {
    int nontrivial = 0;
    for (const auto& size : enumerate_fixed_polyominoes(8))
        for (const Polyomino& p : size) {
            CHECK(satisfies_corner_lemma(p));
            for (RectSide s : {RectSide::left, RectSide::right, RectSide::top, RectSide::bottom}) {
                const CornerCensus c = side_corner_census(p, s);
                CHECK(c.concave == c.convex);
                nontrivial += c.concave > 0;
            }
        }
    CHECK(nontrivial > 500);
}

TEST_CASE("holes and indentations") {
    std::vector<Coord> ring;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (r != 1 || c != 1) ring.push_back({r, c});
    const auto holes = find_holes(poly(ring));
    REQUIRE(holes.size() == 1);
    CHECK(holes[0].size() == 1);
    CHECK(find_indentations(poly(ring)).empty());

    std::vector<Coord> big;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (!(c == 1 && (r == 1 || r == 2))) big.push_back({r, c});
    const auto big_holes = find_holes(poly(big));
    REQUIRE(big_holes.size() == 1);
    CHECK(big_holes[0].size() == 2);

    std::vector<Coord> rect;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 5; ++c) rect.push_back({r, c});
    CHECK(find_holes(poly(rect)).empty());
    CHECK(find_indentations(poly(rect)).empty());

    const auto u = find_indentations(poly({{0, 0}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}));
    REQUIRE(u.size() == 1);
    CHECK(u[0] == poly({{0, 1}}));

    const auto stair = find_indentations(poly({{0, 0}, {1, 0}, {1, 1}}));
    REQUIRE(stair.size() == 1);
    CHECK(stair[0] == poly({{0, 1}}));
}

TEST_CASE("holes and indentations partition the complement") {
    for (const auto& size : enumerate_fixed_polyominoes(8))
        for (const Polyomino& p : size) {
            const BoundingRect r = bounding_rect(p);
            const auto holes = find_holes(p);
            const auto dents = find_indentations(p);
            std::set<Coord> seen(p.cells().begin(), p.cells().end());
            for (const Polyomino& h : holes) {
                CHECK(h.is_connected());
                for (Coord c : h.cells()) {
                    CHECK(seen.insert(c).second);
                    CHECK_FALSE(r.on_boundary(c));
                }
            }
            for (const Polyomino& d : dents) {
                CHECK(d.is_connected());
                CHECK(std::ranges::any_of(d.cells(), [&](Coord c) { return r.on_boundary(c); }));
                for (Coord c : d.cells()) CHECK(seen.insert(c).second);
            }
            CHECK(seen.size() == static_cast<std::size_t>(r.height() * r.width()));

            const Polyomino filled = fill_indentations(p);
            CHECK(find_indentations(filled).empty());
            CHECK(find_holes(filled) == holes);
            CHECK(bounding_rect(filled).height() == r.height());
            for (int row = r.min_row; row <= r.max_row; ++row)
                for (int col = r.min_col; col <= r.max_col; ++col)
                    if (r.on_boundary({row, col})) CHECK(filled.contains({row, col}));
        }
}
