#pragma once

// One-sided non-uniqueness certificates. Two pieces whose tuples are cyclic
// shifts of each other can trade places (each rotated to show the other's
// colours), and a rotationally symmetric piece can be turned in place. Both
// leave every shown colour unchanged while changing which physical half-edges
// touch, so they certify a second valid reconstruction.

#include <optional>
#include <variant>

#include "jigsaw/core.hpp"

namespace jigsaw {

/// rotate_tuple(tuple of a, shift) == tuple of b.
struct PairCertificate {
    Coord a;
    Coord b;
    int shift = 0;
    bool operator==(const PairCertificate&) const = default;
};

struct SymmetricCertificate {
    Coord label;
    bool operator==(const SymmetricCertificate&) const = default;
};

using Certificate = std::variant<PairCertificate, SymmetricCertificate>;

/// Some pair of distinct labels whose tuples are rotations of one another,
/// found by hashing canonical tuples. Deterministic: the first label (in bag
/// order) whose canonical tuple repeats an earlier one, paired with the
/// earliest such piece.
std::optional<PairCertificate> find_rotation_equivalent_pair(const PieceBag& bag);

/// First piece (in bag order) with symmetry order 2 or 4.
std::optional<Coord> find_symmetric_piece(const PieceBag& bag);

/// Pair certificate first, then symmetric piece. Returns nothing for n = 1,
/// where no reconstruction can change the edge pairing.
std::optional<Certificate> find_certificate(const GridColoring& gc);

/// For a pair: the identity assembly with the two pieces exchanged, each
/// rotated to show the colours of the cell it takes over. For a symmetric
/// piece: the identity with that piece turned by its period. Throws
/// std::invalid_argument if the certificate does not hold for `gc` or n = 1.
Assembly build_swap_witness(const GridColoring& gc, const Certificate& cert);

/// exp(-(n^4 - 2n^2) / (8 q^4)): upper bound on the probability that the
/// chessboard subset {(i,j) : i+j even} holds no two identical pieces.
double birthday_upper_bound(int n, int q);

/// Pieces (i,j) with i+j even: pairwise non-adjacent, so their tuples are
/// mutually independent.
PieceBag chessboard_subset(const PieceBag& bag);

/// True if two pieces of `bag` carry exactly the same tuple (no rotation).
bool has_identical_pair(const PieceBag& bag);

}  // namespace jigsaw
