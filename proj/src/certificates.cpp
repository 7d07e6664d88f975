#include "jigsaw/certificates.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace jigsaw {

namespace {

const Piece& piece_with_label(const PieceBag& bag, Coord label) {
    for (const Piece& p : bag)
        if (p.label == label) return p;
    throw std::invalid_argument("certificate label (" + std::to_string(label.row) + "," + std::to_string(label.col) +
                                ") is not in the puzzle");
}

// Smallest r with rotate_tuple(from, r) == to, if any.
std::optional<int> rotation_between(const ColorTuple& from, const ColorTuple& to) {
    for (int r = 0; r < 4; ++r)
        if (rotate_tuple(from, r) == to) return r;
    return std::nullopt;
}

}  // namespace

std::optional<PairCertificate> find_rotation_equivalent_pair(const PieceBag& bag) {
    std::map<ColorTuple, std::size_t> first_seen;
    for (std::size_t i = 0; i < bag.size(); ++i) {
        const auto [it, inserted] = first_seen.emplace(canonical_piece(bag[i].tuple).canon, i);
        if (inserted) continue;
        const Piece& a = bag[it->second];
        const Piece& b = bag[i];
        return PairCertificate{a.label, b.label, *rotation_between(a.tuple, b.tuple)};
    }
    return std::nullopt;
}

std::optional<Coord> find_symmetric_piece(const PieceBag& bag) {
    for (const Piece& p : bag)
        if (canonical_piece(p.tuple).symmetry_order > 1) return p.label;
    return std::nullopt;
}

std::optional<Certificate> find_certificate(const GridColoring& gc) {
    if (gc.n() < 2) return std::nullopt;
    const PieceBag bag = pieces_of(gc);
    if (auto pair = find_rotation_equivalent_pair(bag)) return Certificate{*pair};
    if (auto sym = find_symmetric_piece(bag)) return Certificate{SymmetricCertificate{*sym}};
    return std::nullopt;
}

Assembly build_swap_witness(const GridColoring& gc, const Certificate& cert) {
    if (gc.n() < 2) throw std::invalid_argument("a 1x1 puzzle has no second reconstruction");
    const PieceBag bag = pieces_of(gc);
    Assembly witness = identity_assembly(gc.n());
    if (const auto* pair = std::get_if<PairCertificate>(&cert)) {
        if (pair->a == pair->b) throw std::invalid_argument("pair certificate needs two distinct labels");
        if (pair->shift < 0 || pair->shift > 3) throw std::invalid_argument("pair certificate shift outside 0..3");
        const Piece& a = piece_with_label(bag, pair->a);
        const Piece& b = piece_with_label(bag, pair->b);
        if (rotate_tuple(a.tuple, pair->shift) != b.tuple)
            throw std::invalid_argument("stale certificate: tuples are not related by the recorded shift");
        // b shows a's colours after turning back by `shift`; a shows b's after turning by it.
        witness.at(a.label.row, a.label.col) = {b.label, (4 - pair->shift) % 4};
        witness.at(b.label.row, b.label.col) = {a.label, pair->shift};
    } else {
        const Coord label = std::get<SymmetricCertificate>(cert).label;
        const Piece& p = piece_with_label(bag, label);
        const int order = canonical_piece(p.tuple).symmetry_order;
        if (order < 2) throw std::invalid_argument("stale certificate: piece is not rotationally symmetric");
        witness.at(label.row, label.col).rotation = 4 / order;
    }
    return witness;
}

double birthday_upper_bound(int n, int q) {
    if (n < 2) throw std::invalid_argument("birthday bound needs n >= 2");
    if (q < 1) throw std::invalid_argument("birthday bound needs q >= 1");
    const double n2 = static_cast<double>(n) * n;
    const double q4 = std::pow(static_cast<double>(q), 4);
    return std::exp(-(n2 * n2 - 2.0 * n2) / (8.0 * q4));
}

PieceBag chessboard_subset(const PieceBag& bag) {
    PieceBag out;
    for (const Piece& p : bag)
        if ((p.label.row + p.label.col) % 2 == 0) out.push_back(p);
    return out;
}

bool has_identical_pair(const PieceBag& bag) {
    std::set<ColorTuple> seen;
    for (const Piece& p : bag)
        if (!seen.insert(p.tuple).second) return true;
    return false;
}

}  // namespace jigsaw
