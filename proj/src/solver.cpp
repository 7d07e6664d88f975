#include "jigsaw/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jigsaw {

CompatIndex::CompatIndex(const PieceBag& bag) {
    std::vector<std::uint32_t> order(bag.size());
    std::iota(order.begin(), order.end(), 0U);
    std::ranges::sort(order, [&](std::uint32_t a, std::uint32_t b) { return bag[a].label < bag[b].label; });
    all_.reserve(bag.size() * 4);
    for (std::uint32_t idx : order)
        for (std::uint8_t r = 0; r < 4; ++r) {
            const Candidate cand{idx, r};
            const Color top = shown_color(bag[idx].tuple, r, Side::top);
            const Color left = shown_color(bag[idx].tuple, r, Side::left);
            all_.push_back(cand);
            by_top_[top].push_back(cand);
            by_left_[left].push_back(cand);
            by_both_[key(top, left)].push_back(cand);
        }
}

std::span<const Candidate> CompatIndex::lookup(std::optional<Color> top, std::optional<Color> left) const {
    const auto find_in = [](const auto& map, const auto& k) -> std::span<const Candidate> {
        const auto it = map.find(k);
        if (it == map.end()) return {};
        return it->second;
    };
    if (top && left) return find_in(by_both_, key(*top, *left));
    if (top) return find_in(by_top_, *top);
    if (left) return find_in(by_left_, *left);
    return all_;
}

CompatIndex build_index(const PieceBag& bag) { return CompatIndex(bag); }

namespace {

void require_square_bag(const PieceBag& bag, int n) {
    if (n < 1) throw std::invalid_argument("grid side must be at least 1");
    if (bag.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("bag has " + std::to_string(bag.size()) + " pieces, expected n*n = " +
                                    std::to_string(n * n));
}

// Row-major backtracking with exclusive mutable state.
class Search {
public:
    Search(const PieceBag& bag, int n, std::uint64_t budget)
        : bag_(bag), n_(n), index_(bag), used_(bag.size(), 0), cells_(bag.size()), budget_(budget) {}

    template <class OnSolution>
    SearchStats run(OnSolution&& on_solution) {
        stopped_ = false;
        descend(0, on_solution);
        stats_.completed = !stopped_;
        return stats_;
    }

    Assembly current() const {
        Assembly a(n_);
        for (int i = 0; i < n_ * n_; ++i) {
            const Candidate& c = cells_[static_cast<std::size_t>(i)];
            a.at(i / n_, i % n_) = {bag_[c.piece].label, c.rotation};
        }
        return a;
    }

private:
    template <class OnSolution>
    void descend(int cell, OnSolution& on_solution) {
        if (cell == n_ * n_) {
            ++stats_.solutions;
            if (!on_solution()) stopped_ = true;
            return;
        }
        const int row = cell / n_;
        const int col = cell % n_;
        std::optional<Color> top;
        std::optional<Color> left;
        if (row > 0) {
            const Candidate& above = cells_[static_cast<std::size_t>(cell - n_)];
            top = shown_color(bag_[above.piece].tuple, above.rotation, Side::bottom);
        }
        if (col > 0) {
            const Candidate& prev = cells_[static_cast<std::size_t>(cell - 1)];
            left = shown_color(bag_[prev.piece].tuple, prev.rotation, Side::right);
        }
        for (const Candidate& cand : index_.lookup(top, left)) {
            if (used_[cand.piece]) continue;
            if (stats_.nodes >= budget_) {
                stats_.budget_exhausted = true;
                stopped_ = true;
                return;
            }
            ++stats_.nodes;
            used_[cand.piece] = 1;
            cells_[static_cast<std::size_t>(cell)] = cand;
            descend(cell + 1, on_solution);
            used_[cand.piece] = 0;
            if (stopped_) return;
        }
    }

    const PieceBag& bag_;
    int n_;
    CompatIndex index_;
    std::vector<char> used_;
    std::vector<Candidate> cells_;
    std::uint64_t budget_;
    SearchStats stats_;
    bool stopped_ = false;
};

}  // namespace

SearchStats enumerate_valid(const PieceBag& bag, int n, const SolutionVisitor& visit, std::uint64_t node_budget) {
    require_square_bag(bag, n);
    Search search(bag, n, node_budget);
    return search.run([&] { return visit(search.current()); });
}

CountResult count_valid(const PieceBag& bag, int n, std::uint64_t limit, std::uint64_t node_budget) {
    require_square_bag(bag, n);
    CountResult result;
    if (limit == 0) {
        result.at_least = true;
        return result;
    }
    Search search(bag, n, node_budget);
    const SearchStats stats = search.run([&] { return ++result.count < limit; });
    result.at_least = result.count >= limit;
    result.budget_exhausted = stats.budget_exhausted;
    result.nodes = stats.nodes;
    return result;
}

bool verify_assembly(const PieceBag& bag, const Assembly& a) {
    const int n = a.n();
    if (bag.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("assembly size does not match the bag");
    std::vector<const Piece*> by_label(bag.size(), nullptr);
    for (const Piece& p : bag) {
        if (p.label.row < 0 || p.label.row >= n || p.label.col < 0 || p.label.col >= n)
            throw std::invalid_argument("bag label outside the grid");
        by_label[static_cast<std::size_t>(p.label.row * n + p.label.col)] = &p;
    }
    std::vector<char> placed(bag.size(), 0);
    for (const Placement& pl : a.cells()) {
        if (pl.rotation < 0 || pl.rotation > 3) throw std::invalid_argument("rotation outside 0..3");
        if (pl.label.row < 0 || pl.label.row >= n || pl.label.col < 0 || pl.label.col >= n)
            throw std::invalid_argument("assembly label not in the bag");
        const auto slot = static_cast<std::size_t>(pl.label.row * n + pl.label.col);
        if (by_label[slot] == nullptr || placed[slot]) throw std::invalid_argument("assembly labels do not match the bag");
        placed[slot] = 1;
    }
    const auto shows = [&](int r, int c, Side dir) {
        const Placement& pl = a.at(r, c);
        const Piece& piece = *by_label[static_cast<std::size_t>(pl.label.row * n + pl.label.col)];
        return shown_color(piece.tuple, pl.rotation, dir);
    };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n && shows(r, c, Side::right) != shows(r, c + 1, Side::left)) return false;
            if (r + 1 < n && shows(r, c, Side::bottom) != shows(r + 1, c, Side::top)) return false;
        }
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::unique: return "UNIQUE";
        case Verdict::non_unique: return "NONUNIQUE";
        case Verdict::undetermined: return "UNDETERMINED";
    }
    return "?";
}

UniquenessVerdict decide_unique(const GridColoring& gc, std::uint64_t node_budget) {
    UniquenessVerdict verdict;
    const int n = gc.n();
    if (n == 1) {
        verdict.kind = Verdict::unique;
        return verdict;
    }
    const PieceBag bag = pieces_of(gc);
    const EdgePairing original = original_pairing(n);
    Search search(bag, n, node_budget);
    const SearchStats stats = search.run([&] {
        Assembly candidate = search.current();
        if (edge_pairing(candidate) == original) return true;
        verdict.witness = std::move(candidate);
        return false;
    });
    verdict.nodes = stats.nodes;
    if (verdict.witness) {
        verdict.kind = Verdict::non_unique;
    } else if (stats.budget_exhausted) {
        verdict.kind = Verdict::undetermined;
        verdict.reason = "node budget of " + std::to_string(node_budget) + " exhausted";
    } else {
        // Only the four global rotations of the original survive.
        if (stats.solutions != 4) throw std::logic_error("complete search found a raw count other than 4");
        verdict.kind = Verdict::unique;
    }
    return verdict;
}

}  // namespace jigsaw
