#pragma once

// Exact enumeration of valid reconstructions.
//
// The search fills cells in row-major order. A cell only has to agree with
// its left and top neighbours; border half-edges carry colours but impose no
// constraint. Candidates are tried in (label, rotation) order, so the
// first solutions found, and therefore witnesses, are reproducible.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jigsaw/core.hpp"

namespace jigsaw {

/// An oriented piece: index into the bag plus rotation.
struct Candidate {
    std::uint32_t piece = 0;
    std::uint8_t rotation = 0;
    bool operator==(const Candidate&) const = default;
};

/// Oriented pieces keyed by the colours they show upwards and leftwards.
class CompatIndex {
public:
    explicit CompatIndex(const PieceBag& bag);

    /// Candidates showing `top` upwards and `left` leftwards; an empty optional
    /// is a wildcard for that direction. Ordered by (label, rotation).
    std::span<const Candidate> lookup(std::optional<Color> top, std::optional<Color> left) const;

private:
    static std::uint64_t key(Color top, Color left) noexcept {
        return (static_cast<std::uint64_t>(top) << 32) | left;
    }

    std::vector<Candidate> all_;
    std::unordered_map<Color, std::vector<Candidate>> by_top_;
    std::unordered_map<Color, std::vector<Candidate>> by_left_;
    std::unordered_map<std::uint64_t, std::vector<Candidate>> by_both_;
};

CompatIndex build_index(const PieceBag& bag);

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct SearchStats {
    std::uint64_t solutions = 0;
    std::uint64_t nodes = 0;          ///< candidate placements tried
    bool completed = false;           ///< the whole tree was explored
    bool budget_exhausted = false;
};

/// Called for every valid assembly found; return false to stop the search.
using SolutionVisitor = std::function<bool(const Assembly&)>;

/// Runs the backtracking search over `bag` on an n x n grid, stopping when the
/// visitor returns false or after `node_budget` placements.
SearchStats enumerate_valid(const PieceBag& bag, int n, const SolutionVisitor& visit,
                            std::uint64_t node_budget = kUnlimited);

struct CountResult {
    std::uint64_t count = 0;
    bool at_least = false;  ///< count reached `limit`; the true count may be larger
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
};

/// Number of raw (placement, rotation) pairs whose assembly is valid. Exact if
/// below `limit`; otherwise count == limit and at_least is set. Throws
/// std::invalid_argument unless bag.size() == n*n.
CountResult count_valid(const PieceBag& bag, int n, std::uint64_t limit = kUnlimited,
                        std::uint64_t node_budget = kUnlimited);

/// True iff every internally adjacent pair of cells shows equal colours on the
/// touching sides. Independent of the search. Throws std::invalid_argument if
/// the assembly does not place exactly the labels of `bag`.
bool verify_assembly(const PieceBag& bag, const Assembly& a);

enum class Verdict { unique, non_unique, undetermined };

std::string to_string(Verdict v);

struct UniquenessVerdict {
    Verdict kind = Verdict::undetermined;
    std::optional<Assembly> witness;  ///< set for non_unique
    std::string reason;               ///< set for undetermined
    std::uint64_t nodes = 0;
};

/// Unique iff every valid assembly induces the original edge pairing (for
/// n >= 2 this is a raw count of exactly 4, the global rotations). n = 1 is
/// always unique. Undetermined only when the node budget runs out first.
UniquenessVerdict decide_unique(const GridColoring& gc, std::uint64_t node_budget = kUnlimited);

}  // namespace jigsaw
