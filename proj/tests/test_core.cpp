#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

#include "jigsaw/core.hpp"
#include "test_util.hpp"

using namespace jigsaw;

TEST_CASE("generate_puzzle fills every slot from [0, q)") {
    const GridColoring one = generate_puzzle(2, 1, 99);
    CHECK(one.slot_count() == 12);
    for (Color c : one.horizontal_slots()) CHECK(c == 0);
    for (Color c : one.vertical_slots()) CHECK(c == 0);

    const GridColoring tiny = generate_puzzle(1, 5, 7);
    CHECK(tiny.slot_count() == 4);
    for (Color c : tiny.horizontal_slots()) CHECK(c < 5);
    CHECK(tiny == generate_puzzle(1, 5, 7));

    for (int n = 1; n <= 9; ++n) CHECK(generate_puzzle(n, 3, 1).slot_count() == static_cast<std::size_t>(2 * n * n + 2 * n));
}

TEST_CASE("generate_puzzle is deterministic and seed-sensitive") {
    CHECK(generate_puzzle(6, 10, 123) == generate_puzzle(6, 10, 123));
    CHECK_FALSE(generate_puzzle(6, 10, 123) == generate_puzzle(6, 10, 124));
}

TEST_CASE("generate_puzzle frozen output") {
    // Pins the generator: mt19937_64 seeded with mix64(seed), rejection-bounded draws.
    const GridColoring gc = generate_puzzle(2, 7, 42);
    std::vector<Color> h(gc.horizontal_slots().begin(), gc.horizontal_slots().end());
    std::vector<Color> v(gc.vertical_slots().begin(), gc.vertical_slots().end());
    Rng rng(42);
    for (Color c : h) CHECK(c == rng.below(7));
    for (Color c : v) CHECK(c == rng.below(7));
}

TEST_CASE("generate_puzzle rejects empty grids and palettes") {
    CHECK_THROWS_AS(generate_puzzle(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_puzzle(3, 0, 1), std::invalid_argument);
}

TEST_CASE("per-slot colour frequencies are uniform") {
    constexpr int n = 8;
    constexpr int q = 4;
    constexpr int runs = 10000;
    const std::size_t slots = 2 * n * n + 2 * n;
    std::vector<std::array<int, q>> counts(slots);
    for (int s = 0; s < runs; ++s) {
        const GridColoring gc = generate_puzzle(n, q, derive_seed(555, static_cast<std::uint64_t>(s)));
        std::size_t i = 0;
        for (Color c : gc.horizontal_slots()) ++counts[i++][c];
        for (Color c : gc.vertical_slots()) ++counts[i++][c];
    }
    const double p = 1.0 / q;
    const double se = std::sqrt(p * (1 - p) / runs);
    int within3 = 0;
    int total = 0;
    double worst = 0;
    for (const auto& slot : counts)
        for (int c : slot) {
            const double z = std::abs(c / static_cast<double>(runs) - p) / se;
            within3 += z <= 3.0;
            ++total;
            worst = std::max(worst, z);
        }
    CHECK(within3 >= total * 99 / 100);
    CHECK(worst < 4.5);
}

TEST_CASE("pieces_of reads the slot layout") {
    // Slots numbered 0..11: horizontal row-major, then vertical row-major.
    const GridColoring gc(2, 12, {0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11});
    const PieceBag bag = pieces_of(gc);
    REQUIRE(bag.size() == 4);
    CHECK(bag[0] == Piece{{0, 0}, {0, 7, 2, 6}});
    CHECK(bag[1] == Piece{{0, 1}, {1, 8, 3, 7}});
    CHECK(bag[2] == Piece{{1, 0}, {2, 10, 4, 9}});
    CHECK(bag[3] == Piece{{1, 1}, {3, 11, 5, 10}});

    for (const Piece& p : pieces_of(GridColoring(2, 1))) CHECK(p.tuple == ColorTuple{0, 0, 0, 0});
}

TEST_CASE("adjacent pieces agree on their shared side") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 1 + static_cast<int>(seed % 7);
        const GridColoring gc = generate_puzzle(n, 3, seed);
        const PieceBag bag = pieces_of(gc);
        const auto at = [&](int r, int c) { return bag[static_cast<std::size_t>(r * n + c)]; };
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                CHECK(at(r, c).label == Coord{r, c});
                if (c + 1 < n) CHECK(at(r, c).tuple[1] == at(r, c + 1).tuple[3]);
                if (r + 1 < n) CHECK(at(r, c).tuple[2] == at(r + 1, c).tuple[0]);
            }
    }
}

TEST_CASE("GridColoring rejects bad input") {
    CHECK_THROWS_AS(GridColoring(2, 3, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GridColoring(2, 3, {0, 0, 0, 0, 0, 3}, {0, 0, 0, 0, 0, 0}), std::invalid_argument);
    GridColoring gc(2, 3);
    CHECK_THROWS_AS(gc.set_vertical(0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gc.horizontal(3, 0), std::out_of_range);
}

TEST_CASE("rotate_tuple") {
    const ColorTuple t{3, 1, 2, 1};
    CHECK(rotate_tuple(t, 0) == t);
    CHECK(rotate_tuple(t, 1) == ColorTuple{1, 3, 1, 2});
    std::set<ColorTuple> all;
    for (int r = 0; r < 4; ++r) all.insert(rotate_tuple(t, r));
    CHECK(all == std::set<ColorTuple>{{3, 1, 2, 1}, {1, 3, 1, 2}, {2, 1, 3, 1}, {1, 2, 1, 3}});

    const ColorTuple u{4, 5, 6, 7};
    CHECK(rotate_tuple(rotate_tuple(rotate_tuple(rotate_tuple(u, 1), 1), 1), 1) == u);
    CHECK_THROWS_AS(rotate_tuple(t, 4), std::invalid_argument);
    CHECK_THROWS_AS(rotate_tuple(t, -1), std::invalid_argument);
}

TEST_CASE("rotate_tuple agrees with shown_color and composes additively") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        ColorTuple t{};
        for (Color& c : t) c = static_cast<Color>(rng.below(3));
        for (int a = 0; a < 4; ++a) {
            for (int d = 0; d < 4; ++d) CHECK(rotate_tuple(t, a)[d] == shown_color(t, a, side_from_index(d)));
            for (int b = 0; b < 4; ++b) CHECK(rotate_tuple(rotate_tuple(t, a), b) == rotate_tuple(t, (a + b) % 4));
        }
    }
}

TEST_CASE("canonical_piece") {
    const CanonicalPiece a = canonical_piece({3, 1, 2, 1});
    CHECK(a.canon == ColorTuple{1, 2, 1, 3});
    CHECK(a.symmetry_order == 1);
    CHECK(rotate_tuple({3, 1, 2, 1}, a.shift) == a.canon);

    const CanonicalPiece b = canonical_piece({2, 7, 2, 7});
    CHECK(b.canon == ColorTuple{2, 7, 2, 7});
    CHECK(b.symmetry_order == 2);

    const CanonicalPiece c = canonical_piece({5, 5, 5, 5});
    CHECK(c.canon == ColorTuple{5, 5, 5, 5});
    CHECK(c.symmetry_order == 4);
}

TEST_CASE("canonical_piece properties over all tuples on 3 colours") {
    for (Color a = 0; a < 3; ++a)
        for (Color b = 0; b < 3; ++b)
            for (Color c = 0; c < 3; ++c)
                for (Color d = 0; d < 3; ++d) {
                    const ColorTuple t{a, b, c, d};
                    const CanonicalPiece cp = canonical_piece(t);
                    std::set<ColorTuple> shifts;
                    for (int r = 0; r < 4; ++r) {
                        shifts.insert(rotate_tuple(t, r));
                        CHECK(cp.canon <= rotate_tuple(t, r));
                        CHECK(canonical_piece(rotate_tuple(t, r)).canon == cp.canon);
                    }
                    CHECK(cp.symmetry_order == 4 / static_cast<int>(shifts.size()));
                    CHECK((cp.symmetry_order == 4) == (a == b && b == c && c == d));
                    CHECK(canonical_piece(cp.canon).canon == cp.canon);
                    CHECK(rotate_tuple(t, cp.shift) == cp.canon);
                }
}

TEST_CASE("edge_pairing sizes and identity") {
    const EdgePairing e = edge_pairing(identity_assembly(2));
    CHECK(e.pairs.size() == 4);
    CHECK(e.singles.size() == 8);
    CHECK(e == original_pairing(2));
    for (const auto& [a, b] : e.pairs) CHECK(partner(a) == b);
    for (const HalfEdge& h : e.singles) {
        const Coord p = partner(h).label;
        CHECK((p.row < 0 || p.row >= 2 || p.col < 0 || p.col >= 2));
    }
}

TEST_CASE("edge_pairing covers every half-edge once and is invariant under global rotation") {
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 6;
        const Assembly a = testutil::random_assembly(n, rng);
        const EdgePairing e = edge_pairing(a);
        CHECK(e.pairs.size() == static_cast<std::size_t>(2 * n * (n - 1)));
        CHECK(e.singles.size() == static_cast<std::size_t>(4 * n));
        std::set<HalfEdge> seen;
        for (const auto& [x, y] : e.pairs) {
            CHECK(x < y);
            CHECK(seen.insert(x).second);
            CHECK(seen.insert(y).second);
        }
        for (const HalfEdge& h : e.singles) CHECK(seen.insert(h).second);
        CHECK(seen.size() == static_cast<std::size_t>(4 * n * n));

        Assembly turned = a;
        for (int k = 1; k < 4; ++k) {
            turned = rotate_assembly(turned);
            CHECK(edge_pairing(turned) == e);
        }
        CHECK(rotate_assembly(turned) == a);
    }
}

TEST_CASE("a single rotated piece changes the pairing") {
    Assembly a = identity_assembly(3);
    a.at(1, 1).rotation = 1;
    CHECK_FALSE(edge_pairing(a) == original_pairing(3));
}

TEST_CASE("Assembly validation") {
    CHECK_NOTHROW(identity_assembly(3).validate());
    Assembly dup = identity_assembly(2);
    dup.at(0, 1).label = {0, 0};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
    Assembly rot = identity_assembly(2);
    rot.at(0, 0).rotation = 4;
    CHECK_THROWS_AS(rot.validate(), std::invalid_argument);
    CHECK_THROWS_AS(Assembly(2, std::vector<Placement>(3)), std::invalid_argument);
}
