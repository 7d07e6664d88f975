#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

#include "jigsaw/certificates.hpp"
#include "jigsaw/solver.hpp"
#include "test_util.hpp"

using namespace jigsaw;

namespace {

void check_sound(const GridColoring& gc, const Certificate& cert) {
    const Assembly w = build_swap_witness(gc, cert);
    CHECK(verify_assembly(pieces_of(gc), w));
    CHECK_FALSE(edge_pairing(w) == original_pairing(gc.n()));
}

// Distinct canonical tuples, counted directly from the four rotations.
bool all_rotation_classes_distinct(const PieceBag& bag) {
    for (std::size_t i = 0; i < bag.size(); ++i)
        for (std::size_t j = i + 1; j < bag.size(); ++j)
            for (int r = 0; r < 4; ++r)
                if (rotate_tuple(bag[i].tuple, r) == bag[j].tuple) return false;
    return true;
}

}  // namespace

TEST_CASE("find_rotation_equivalent_pair") {
    const PieceBag bag{{{0, 0}, {1, 2, 3, 4}}, {{0, 1}, {9, 8, 7, 6}}, {{1, 0}, {2, 3, 4, 1}}};
    const auto pair = find_rotation_equivalent_pair(bag);
    REQUIRE(pair);
    CHECK(pair->a == Coord{0, 0});
    CHECK(pair->b == Coord{1, 0});
    CHECK(rotate_tuple(bag[0].tuple, pair->shift) == bag[2].tuple);

    const PieceBag distinct{{{0, 0}, {1, 2, 3, 4}}, {{0, 1}, {1, 2, 4, 3}}, {{1, 0}, {5, 5, 5, 6}}};
    CHECK_FALSE(find_rotation_equivalent_pair(distinct));
}

TEST_CASE("pair detector fires exactly when rotation classes collide") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const int q = 2 + static_cast<int>(seed % 4);
        const PieceBag bag = pieces_of(generate_puzzle(n, q, seed));
        CHECK(find_rotation_equivalent_pair(bag).has_value() == !all_rotation_classes_distinct(bag));
    }
}

TEST_CASE("find_symmetric_piece") {
    CHECK(find_symmetric_piece({{{0, 0}, {1, 2, 3, 4}}, {{0, 1}, {7, 7, 7, 7}}}) == Coord{0, 1});
    CHECK(find_symmetric_piece({{{0, 0}, {2, 5, 2, 5}}}) == Coord{0, 0});
    CHECK_FALSE(find_symmetric_piece({{{0, 0}, {1, 2, 3, 4}}, {{0, 1}, {4, 3, 2, 1}}}));
}

TEST_CASE("swap witnesses") {
    const GridColoring one(2, 1);
    const auto cert = find_certificate(one);
    REQUIRE(cert);
    CHECK(std::holds_alternative<PairCertificate>(*cert));
    check_sound(one, *cert);

    // A lone symmetric piece among otherwise distinct tuples.
    GridColoring sym(2, 20);
    Color c = 1;
    for (int r = 0; r <= 2; ++r)
        for (int col = 0; col < 2; ++col) sym.set_horizontal(r, col, c++);
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col <= 2; ++col) sym.set_vertical(r, col, c++);
    sym.set_horizontal(0, 0, 0);
    sym.set_horizontal(1, 0, 0);
    sym.set_vertical(0, 0, 0);
    sym.set_vertical(0, 1, 0);
    const auto sym_cert = find_certificate(sym);
    REQUIRE(sym_cert);
    REQUIRE(std::holds_alternative<SymmetricCertificate>(*sym_cert));
    CHECK(std::get<SymmetricCertificate>(*sym_cert).label == Coord{0, 0});
    check_sound(sym, *sym_cert);
    for (int r = 1; r < 4; ++r) {
        Assembly turned = identity_assembly(2);
        turned.at(0, 0).rotation = r;
        CHECK(verify_assembly(pieces_of(sym), turned));
    }

    CHECK_FALSE(find_certificate(GridColoring(1, 1)));
    CHECK_THROWS_AS(build_swap_witness(GridColoring(1, 1), SymmetricCertificate{{0, 0}}), std::invalid_argument);
}

TEST_CASE("stale certificates are rejected") {
    Rng rng(4);
    const GridColoring gc = testutil::distinct_2x2(rng);
    CHECK_FALSE(find_certificate(gc));
    CHECK_THROWS_AS(build_swap_witness(gc, PairCertificate{{0, 0}, {1, 1}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_swap_witness(gc, SymmetricCertificate{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_swap_witness(gc, PairCertificate{{0, 0}, {5, 5}, 0}), std::invalid_argument);
}

TEST_CASE("certificates are sound on random puzzles, including adjacent pairs") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const int n = 2 + static_cast<int>(seed % 6);
        const int q = 1 + static_cast<int>(seed % 5);
        const GridColoring gc = generate_puzzle(n, q, seed);
        if (const auto cert = find_certificate(gc)) {
            check_sound(gc, *cert);
            ++checked;
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("no certificate on exactly unique instances") {
    int unique = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const int q = 4 + static_cast<int>(seed % 10) * 3;
        const GridColoring gc = generate_puzzle(n, q, 9000 + seed);
        if (decide_unique(gc).kind == Verdict::unique) {
            ++unique;
            CHECK_FALSE(find_certificate(gc));
        }
    }
    CHECK(unique > 50);
}

TEST_CASE("birthday_upper_bound") {
    CHECK(birthday_upper_bound(30, 5) == doctest::Approx(std::exp(-161.64)).epsilon(1e-12));
    CHECK(std::log(birthday_upper_bound(30, 5)) == doctest::Approx(-161.64));
    CHECK(birthday_upper_bound(2, 1) == doctest::Approx(std::exp(-1.0)));
    for (int q = 1; q < 20; ++q) CHECK(birthday_upper_bound(6, q) < birthday_upper_bound(6, q + 1));
    CHECK_THROWS_AS(birthday_upper_bound(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(birthday_upper_bound(3, 0), std::invalid_argument);
}

TEST_CASE("collision frequency on the chessboard subset stays under the bound") {
    // n = 6, q = 3: bound exp(-1224/648) ~ 0.151.
    constexpr int trials = 4000;
    int no_identical = 0;
    int full_misses = 0;
    for (int t = 0; t < trials; ++t) {
        const GridColoring gc = generate_puzzle(6, 3, derive_seed(31337, static_cast<std::uint64_t>(t)));
        const PieceBag bag = pieces_of(gc);
        const bool subset_hit = has_identical_pair(chessboard_subset(bag));
        no_identical += !subset_hit;
        full_misses += !find_rotation_equivalent_pair(bag).has_value();
        if (subset_hit) CHECK(find_rotation_equivalent_pair(bag));
    }
    const double p = no_identical / static_cast<double>(trials);
    const double bound = birthday_upper_bound(6, 3);
    CHECK(p <= bound + 3 * std::sqrt(bound * (1 - bound) / trials));
    CHECK(full_misses <= no_identical);
}

TEST_CASE("chessboard subset is independent") {
    const PieceBag sub = chessboard_subset(pieces_of(generate_puzzle(5, 3, 1)));
    CHECK(sub.size() == 13);
    for (const Piece& a : sub)
        for (const Piece& b : sub) CHECK(std::abs(a.label.row - b.label.row) + std::abs(a.label.col - b.label.col) != 1);
}
