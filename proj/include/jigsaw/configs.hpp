#pragma once

// Configurations: source components of the original grid rearranged into a
// small patch S u U, with every S-U edge new. A patch records where each
// source piece lands and how it is turned, classifies every edge of the patch
// as original or new, and tags the new edges that feed the two deferred-
// decision bounds:
//
//   * exact ordering - edges e_1..e_k such that for every i at most one of
//     the partners of e_i's half-edges lies on e_1..e_{i-1}. All k edges are
//     then monochromatic with probability exactly q^-k.
//   * pairwise bound - edges each with at most one half-edge colour already
//     known. All m are monochromatic with probability at most q^-ceil(m/2).
//
// The true size constants are astronomically large, so builders take small
// surrogate sizes; config_constants() keeps the true values inspectable.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jigsaw/core.hpp"
#include "jigsaw/polyomino.hpp"

namespace jigsaw {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool operator==(const Rational&) const = default;
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Reduced fraction with positive denominator.
Rational make_rational(std::int64_t num, std::int64_t den);

/// Exact decimal expansion of a literal such as "0.2" or "1/5".
Rational parse_rational(const std::string& text);

struct ConfigConstants {
    Rational epsilon;
    std::int64_t ell = 0;  ///< ceil(3 (1 + 1/eps)), minimum straight run
    std::int64_t s = 0;    ///< 4 ell^2
    Rational k;            ///< 4 s^2 / eps, side of the sub-square
};

/// Exact evaluation for 0 < eps < 1/4. Throws std::invalid_argument outside
/// that range and std::overflow_error if a constant does not fit 64 bits.
ConfigConstants config_constants(Rational epsilon);
/// Converts through the shortest decimal representation of `epsilon`.
ConfigConstants config_constants(double epsilon);

enum class ConfigType { straightline, convexcorners, hole, indentation, subsquare, swap_pair };

std::string to_string(ConfigType t);
ConfigType config_type_from_string(const std::string& name);

enum class RevealPhase { none, exact, pairwise };

struct PatchPiece {
    Coord source;   ///< position in the original grid
    Coord target;   ///< position in the patch
    int rotation = 0;
    int component = 1;  ///< 1-based index of the source component C_i
    bool in_s = false;
};

struct PatchEdge {
    Coord target_a;  ///< left or upper cell
    Coord target_b;  ///< right or lower cell
    HalfEdge half_a;
    HalfEdge half_b;
    bool is_new = false;
    bool between_s_and_u = false;
    RevealPhase phase = RevealPhase::none;
    bool known_a = false;  ///< colour of half_a revealed before the pairwise phase
    bool known_b = false;
};

struct PatchSpec {
    ConfigType type = ConfigType::straightline;
    Polyomino s;
    Polyomino u;
    int m = 1;
    std::vector<PatchPiece> pieces;
    std::vector<PatchEdge> edges;
    /// Indices into `edges` in reveal order for the exact phase.
    std::optional<std::vector<std::size_t>> ordering;
    /// Restricted stable sets of U (sub-square patches only).
    std::vector<Polyomino> stable_sets;
    int z = 0;

    std::size_t new_edge_count() const;
    /// Number of S-U edges (the border length b of U for hole patches).
    std::size_t border_edges() const;
};

/// Surrogate sizes. Which fields a type reads:
///   straightline   length (row length), m
///   convexcorners  corners (right-facing convex corners of the staircase), m
///   hole           rows x cols block U, m
///   indentation    rows x cols block U, sides (2 or 3), m
///   subsquare      square (side of U), m, optional decomposition
struct PatchParams {
    int length = 4;
    int corners = 4;
    int rows = 1;
    int cols = 1;
    int sides = 3;
    int square = 4;
    int m = 1;
    std::vector<std::vector<Coord>> decomposition;  ///< target cells of each stable set
};

/// Builds the canonical patch of the given type. U is split into m
/// contiguous runs (row-major), one per component; C_1 owns S and also
/// contributes a run of U pieces taken from a row attached to S in the source.
/// Throws std::invalid_argument for impossible parameters.
PatchSpec build_patch(ConfigType type, const PatchParams& params);

/// The rearrangement of edges (a,a') and (b,b') into (a,b') and (b,a').
PatchSpec swap_pair_patch();

/// Computes the edges of an arbitrary rearrangement and checks the
/// configuration invariants (components connected and pairwise non-adjacent
/// in the source, S inside C_1, every S-U edge new). The phases of the
/// returned edges are all `none`.
PatchSpec make_patch(ConfigType type, std::vector<PatchPiece> pieces, int m);

/// True iff every listed edge is new and, for each i, at most one partner of
/// its two half-edges lies on an earlier listed edge.
bool satisfies_exact_hypothesis(const PatchSpec& patch, std::span<const std::size_t> ordering);

/// Greedy reveal order over all new edges satisfying the exact hypothesis, or
/// nothing if the greedy pass gets stuck.
std::optional<std::vector<std::size_t>> greedy_exact_ordering(const PatchSpec& patch);

/// Copy of `patch` whose exact phase is `ordering`; pairwise-phase known
/// flags are recomputed. Throws if the ordering violates the hypothesis.
PatchSpec with_ordering(PatchSpec patch, std::vector<std::size_t> ordering);

/// q^-k for the k edges of patch.ordering. Throws std::invalid_argument if
/// there is no ordering or it violates the hypothesis.
double prop1_exact(const PatchSpec& patch, int q);

/// q^-ceil(m/2).
double prop2_bound(int m_edges, int q);

/// prop2_bound over the pairwise-phase edges of `patch`, after checking that
/// none has both half-edge colours known.
double prop2_bound(const PatchSpec& patch, int q);

/// prop1_exact(ordering) * prop2_bound(pairwise edges), the product used for
/// straightline, convexcorners and hole patches.
double deferred_bound(const PatchSpec& patch, int q);

/// q^(2 - 2m - b/4) for a hole patch with b S-U edges. Throws for other types
/// or an odd b.
double hole_border_exponent(const PatchSpec& patch, int q);

/// min(1/q, q^-2(m-1)) for an indentation patch.
double indentation_bound(const PatchSpec& patch, int q);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
};

/// Monte Carlo frequency that all new edges of the patch are monochromatic
/// when the source slots are coloured uniformly from [0, q). Trials are cut
/// into fixed chunks seeded by derive_seed(seed, chunk), so the result does
/// not depend on `threads` (0 = hardware concurrency).
Estimate estimate_patch_validity(const PatchSpec& patch, int q, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 1);

}  // namespace jigsaw
