#include "jigsaw/configs.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "jigsaw/rng.hpp"

namespace jigsaw {

// ---------------------------------------------------------------------------
// Constants

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

Rational parse_rational(const std::string& text) {
    const auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw std::invalid_argument("not a rational number: '" + text + "'");
        return v;
    };
    const std::string_view sv(text);
    if (const auto slash = sv.find('/'); slash != std::string_view::npos)
        return make_rational(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
    const auto dot = sv.find('.');
    if (dot == std::string_view::npos) return make_rational(parse_int(sv), 1);
    const std::string_view frac = sv.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("too many decimal digits: '" + text + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::string_view whole = sv.substr(0, dot);
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    if (w < 0 || (!whole.empty() && whole.front() == '-')) throw std::invalid_argument("negative decimal: '" + text + "'");
    std::int64_t num = 0;
    if (__builtin_mul_overflow(w, den, &num) || __builtin_add_overflow(num, f, &num))
        throw std::overflow_error("decimal does not fit 64 bits: '" + text + "'");
    return make_rational(num, den);
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("configuration constant overflows 64 bits");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("configuration constant overflows 64 bits");
    return out;
}

}  // namespace

ConfigConstants config_constants(Rational epsilon) {
    const Rational eps = make_rational(epsilon.num, epsilon.den);
    // 0 < p/d < 1/4
    if (eps.num <= 0 || checked_mul(eps.num, 4) >= eps.den)
        throw std::invalid_argument("epsilon must lie in (0, 1/4)");
    ConfigConstants out;
    out.epsilon = eps;
    // ceil(3 (p + d) / p)
    const std::int64_t top = checked_mul(3, checked_add(eps.num, eps.den));
    out.ell = top / eps.num + (top % eps.num != 0);
    out.s = checked_mul(4, checked_mul(out.ell, out.ell));
    // 4 s^2 d / p, reduced before multiplying out where possible.
    const std::int64_t g = std::gcd(out.s, eps.num);
    const std::int64_t s_red = out.s / g;
    const std::int64_t p_red = eps.num / g;
    const std::int64_t g2 = std::gcd(s_red, p_red);
    out.k = make_rational(checked_mul(checked_mul(4, checked_mul(out.s / g2, s_red / g2)), eps.den),
                          p_red / g2);
    return out;
}

ConfigConstants config_constants(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 0.25)) throw std::invalid_argument("epsilon must lie in (0, 1/4)");
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, epsilon, std::chars_format::fixed);
    if (ec != std::errc{}) throw std::invalid_argument("cannot format epsilon");
    return config_constants(parse_rational(std::string(buf, ptr)));
}

std::string to_string(ConfigType t) {
    switch (t) {
        case ConfigType::straightline: return "straightline";
        case ConfigType::convexcorners: return "convexcorners";
        case ConfigType::hole: return "hole";
        case ConfigType::indentation: return "indentation";
        case ConfigType::subsquare: return "subsquare";
        case ConfigType::swap_pair: return "swap_pair";
    }
    return "?";
}

ConfigType config_type_from_string(const std::string& name) {
    for (ConfigType t : {ConfigType::straightline, ConfigType::convexcorners, ConfigType::hole,
                         ConfigType::indentation, ConfigType::subsquare, ConfigType::swap_pair})
        if (to_string(t) == name) return t;
    throw std::invalid_argument("unknown configuration type '" + name + "'");
}

// ---------------------------------------------------------------------------
// Patch geometry

std::size_t PatchSpec::new_edge_count() const {
    return static_cast<std::size_t>(std::ranges::count_if(edges, [](const PatchEdge& e) { return e.is_new; }));
}

std::size_t PatchSpec::border_edges() const {
    return static_cast<std::size_t>(std::ranges::count_if(edges, [](const PatchEdge& e) { return e.between_s_and_u; }));
}

namespace {

struct SlotKey {
    int vertical;  // 0: horizontal slot, 1: vertical slot
    int row;
    int col;
    auto operator<=>(const SlotKey&) const = default;
};

SlotKey slot_of(const HalfEdge& h) {
    switch (h.side) {
        case Side::top: return {0, h.label.row, h.label.col};
        case Side::bottom: return {0, h.label.row + 1, h.label.col};
        case Side::left: return {1, h.label.row, h.label.col};
        case Side::right: return {1, h.label.row, h.label.col + 1};
    }
    throw std::logic_error("bad side");
}

void recompute_known(PatchSpec& patch) {
    std::set<HalfEdge> revealed;
    if (patch.ordering)
        for (std::size_t idx : *patch.ordering) {
            const PatchEdge& e = patch.edges[idx];
            for (const HalfEdge& h : {e.half_a, e.half_b}) {
                revealed.insert(h);
                revealed.insert(partner(h));
            }
        }
    for (PatchEdge& e : patch.edges) {
        e.known_a = e.phase == RevealPhase::pairwise && revealed.contains(e.half_a);
        e.known_b = e.phase == RevealPhase::pairwise && revealed.contains(e.half_b);
    }
}

}  // namespace

PatchSpec make_patch(ConfigType type, std::vector<PatchPiece> pieces, int m) {
    if (m < 1) throw std::invalid_argument("a configuration needs at least one component");
    if (pieces.empty()) throw std::invalid_argument("a configuration needs at least one piece");
    std::map<Coord, std::size_t> by_target;
    std::map<Coord, int> component_of_source;
    std::vector<std::vector<Coord>> components(static_cast<std::size_t>(m));
    std::vector<Coord> s_cells;
    std::vector<Coord> s_sources;
    std::vector<Coord> u_cells;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const PatchPiece& p = pieces[i];
        if (p.rotation < 0 || p.rotation > 3) throw std::invalid_argument("rotation outside 0..3");
        if (p.component < 1 || p.component > m) throw std::invalid_argument("component index outside 1..m");
        if (!by_target.emplace(p.target, i).second) throw std::invalid_argument("two pieces share a target cell");
        if (!component_of_source.emplace(p.source, p.component).second)
            throw std::invalid_argument("a source piece is used twice");
        components[static_cast<std::size_t>(p.component - 1)].push_back(p.source);
        if (p.in_s) {
            if (p.component != 1) throw std::invalid_argument("S must lie inside C_1");
            s_cells.push_back(p.target);
            s_sources.push_back(p.source);
        } else {
            u_cells.push_back(p.target);
        }
    }
    for (const auto& comp : components) {
        if (comp.empty()) throw std::invalid_argument("every component needs at least one piece");
        if (!Polyomino(comp).is_connected()) throw std::invalid_argument("a component is not connected in the source");
    }
    for (const auto& [src, comp] : component_of_source)
        for (Side d : {Side::right, Side::bottom}) {
            const auto it = component_of_source.find(step(src, d));
            if (it != component_of_source.end() && it->second != comp)
                throw std::invalid_argument("two components are adjacent in the source");
        }
    if (!s_sources.empty() && !Polyomino(s_sources).is_connected())
        throw std::invalid_argument("S is not connected in the source");

    PatchSpec patch;
    patch.type = type;
    patch.m = m;
    patch.s = Polyomino(std::move(s_cells));
    patch.u = Polyomino(std::move(u_cells));
    for (const auto& [target, idx] : by_target) {
        const PatchPiece& a = pieces[idx];
        for (Side d : {Side::right, Side::bottom}) {
            const auto it = by_target.find(step(target, d));
            if (it == by_target.end()) continue;
            const PatchPiece& b = pieces[it->second];
            PatchEdge e;
            e.target_a = a.target;
            e.target_b = b.target;
            e.half_a = {a.source, physical_side(a.rotation, d)};
            e.half_b = {b.source, physical_side(b.rotation, opposite(d))};
            e.is_new = partner(e.half_a) != e.half_b;
            e.between_s_and_u = a.in_s != b.in_s;
            if (e.between_s_and_u && !e.is_new) throw std::invalid_argument("an S-U edge is original");
            patch.edges.push_back(e);
        }
    }
    patch.pieces = std::move(pieces);
    return patch;
}

bool satisfies_exact_hypothesis(const PatchSpec& patch, std::span<const std::size_t> ordering) {
    std::set<HalfEdge> earlier;
    std::set<std::size_t> used;
    for (std::size_t idx : ordering) {
        if (idx >= patch.edges.size() || !used.insert(idx).second) return false;
        const PatchEdge& e = patch.edges[idx];
        if (!e.is_new) return false;
        const int hits = static_cast<int>(earlier.contains(partner(e.half_a))) +
                         static_cast<int>(earlier.contains(partner(e.half_b)));
        if (hits > 1) return false;
        earlier.insert(e.half_a);
        earlier.insert(e.half_b);
    }
    return true;
}

std::optional<std::vector<std::size_t>> greedy_exact_ordering(const PatchSpec& patch) {
    std::vector<std::size_t> remaining;
    for (std::size_t i = 0; i < patch.edges.size(); ++i)
        if (patch.edges[i].is_new) remaining.push_back(i);
    std::vector<std::size_t> order;
    while (!remaining.empty()) {
        bool progressed = false;
        for (auto it = remaining.begin(); it != remaining.end(); ++it) {
            order.push_back(*it);
            if (satisfies_exact_hypothesis(patch, order)) {
                remaining.erase(it);
                progressed = true;
                break;
            }
            order.pop_back();
        }
        if (!progressed) return std::nullopt;
    }
    return order;
}

PatchSpec with_ordering(PatchSpec patch, std::vector<std::size_t> ordering) {
    if (!satisfies_exact_hypothesis(patch, ordering))
        throw std::invalid_argument("ordering violates the exact-probability hypothesis");
    for (PatchEdge& e : patch.edges)
        if (e.phase == RevealPhase::exact) e.phase = RevealPhase::none;
    for (std::size_t idx : ordering) patch.edges[idx].phase = RevealPhase::exact;
    patch.ordering = std::move(ordering);
    recompute_known(patch);
    return patch;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

// Splits `count` cells into m runs as evenly as possible, larger runs first.
std::vector<int> run_sizes(int count, int m) {
    std::vector<int> sizes(static_cast<std::size_t>(m), count / m);
    for (int i = 0; i < count % m; ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

struct Layout {
    std::vector<Coord> s_cells;  // placed identically: source == target
    std::vector<Coord> u_cells;  // in the order runs are laid out
    std::optional<Coord> attach;  // first source cell of C_1's U run (extends rightwards)
    std::vector<int> run_order;   // component index for each run, left to right
};

std::vector<PatchPiece> place(const Layout& layout, int m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (static_cast<std::size_t>(m) > layout.u_cells.size())
        throw std::invalid_argument("more components than U cells");
    std::vector<PatchPiece> pieces;
    int max_row = 0;
    for (Coord c : layout.s_cells) {
        pieces.push_back({c, c, 0, 1, true});
        max_row = std::max(max_row, c.row);
    }
    if (layout.attach) max_row = std::max(max_row, layout.attach->row);
    const std::vector<int> sizes = run_sizes(static_cast<int>(layout.u_cells.size()), m);
    std::size_t next = 0;
    for (std::size_t run = 0; run < layout.run_order.size(); ++run) {
        const int comp = layout.run_order[run];
        const int size = sizes[run];
        // C_1 grows out of S when S exists; every other run is its own source row.
        Coord origin{max_row + 2 + 2 * (comp - 1), 0};
        if (comp == 1 && layout.attach) origin = *layout.attach;
        for (int k = 0; k < size; ++k)
            pieces.push_back({{origin.row, origin.col + k}, layout.u_cells[next++], 0, comp, false});
    }
    return pieces;
}

std::vector<int> natural_order(int m) {
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 1);
    return order;
}

std::optional<std::size_t> edge_between(const PatchSpec& patch, Coord x, Coord y) {
    for (std::size_t i = 0; i < patch.edges.size(); ++i) {
        const PatchEdge& e = patch.edges[i];
        if ((e.target_a == x && e.target_b == y) || (e.target_a == y && e.target_b == x)) return i;
    }
    return std::nullopt;
}

// First U piece (in U layout order) of each component in `components`.
std::vector<Coord> first_pieces(const PatchSpec& patch, const std::vector<Coord>& u_order, int from_component) {
    std::map<Coord, int> comp_at;
    for (const PatchPiece& p : patch.pieces)
        if (!p.in_s) comp_at[p.target] = p.component;
    std::set<int> seen;
    std::vector<Coord> out;
    for (Coord c : u_order) {
        const int comp = comp_at.at(c);
        if (comp >= from_component && seen.insert(comp).second) out.push_back(c);
    }
    return out;
}

void finish(PatchSpec& patch, std::vector<std::size_t> exact, const std::vector<std::size_t>& pairwise) {
    for (std::size_t idx : pairwise) patch.edges[idx].phase = RevealPhase::pairwise;
    if (!satisfies_exact_hypothesis(patch, exact))
        throw std::logic_error("builder produced an ordering that violates the exact hypothesis");
    for (std::size_t idx : exact) patch.edges[idx].phase = RevealPhase::exact;
    patch.ordering = std::move(exact);
    recompute_known(patch);
}

PatchSpec build_straightline(const PatchParams& p) {
    if (p.length < 1) throw std::invalid_argument("straightline length must be at least 1");
    Layout layout;
    for (int c = 0; c < p.length; ++c) {
        layout.s_cells.push_back({0, c});
        layout.u_cells.push_back({1, c});
    }
    layout.attach = Coord{0, p.length};
    // Runs left to right: C_2, C_1, C_3, ..., C_m.
    layout.run_order = natural_order(p.m);
    if (p.m >= 2) std::swap(layout.run_order[0], layout.run_order[1]);
    PatchSpec patch = make_patch(ConfigType::straightline, place(layout, p.m), p.m);

    std::vector<Coord> w;
    for (Coord c : first_pieces(patch, layout.u_cells, 2))
        if (c.col > 0 && static_cast<int>(w.size()) < p.m - 2) w.push_back(c);
    std::vector<std::size_t> exact;
    for (Coord c : w) {
        exact.push_back(*edge_between(patch, {c.row, c.col - 1}, c));
        exact.push_back(*edge_between(patch, {c.row - 1, c.col}, c));
    }
    std::vector<std::size_t> pairwise;
    for (Coord c : layout.u_cells)
        if (std::ranges::find(w, c) == w.end()) pairwise.push_back(*edge_between(patch, {c.row - 1, c.col}, c));
    finish(patch, std::move(exact), pairwise);
    return patch;
}

PatchSpec build_convexcorners(const PatchParams& p) {
    if (p.corners < 1) throw std::invalid_argument("convexcorners needs at least one corner");
    const int c = p.corners;
    // Staircase band: row 0 holds (0,0), row r >= 1 holds (r,r-1) and (r,r).
    // Each notch (r, r+1) is a right-facing convex corner with S to its left
    // and below.
    Layout layout;
    layout.s_cells.push_back({0, 0});
    for (int r = 1; r <= c; ++r) {
        layout.s_cells.push_back({r, r - 1});
        layout.s_cells.push_back({r, r});
    }
    for (int r = 0; r < c; ++r) layout.u_cells.push_back({r, r + 1});
    layout.attach = Coord{c, c + 1};
    layout.run_order = natural_order(p.m);
    PatchSpec patch = make_patch(ConfigType::convexcorners, place(layout, p.m), p.m);

    const std::vector<Coord> w = first_pieces(patch, layout.u_cells, 2);
    std::vector<std::size_t> exact;
    std::vector<std::size_t> pairwise;
    for (Coord cell : layout.u_cells) {
        const bool in_w = std::ranges::find(w, cell) != w.end();
        for (std::size_t i = 0; i < patch.edges.size(); ++i) {
            const PatchEdge& e = patch.edges[i];
            if (e.between_s_and_u && (e.target_a == cell || e.target_b == cell)) (in_w ? exact : pairwise).push_back(i);
        }
    }
    finish(patch, std::move(exact), pairwise);
    return patch;
}

std::vector<std::size_t> left_and_up_edges(const PatchSpec& patch, const std::vector<Coord>& w) {
    std::vector<std::size_t> out;
    for (Coord c : w) {
        if (const auto e = edge_between(patch, {c.row, c.col - 1}, c)) out.push_back(*e);
        if (const auto e = edge_between(patch, {c.row - 1, c.col}, c)) out.push_back(*e);
    }
    return out;
}

std::vector<Coord> block(int row0, int col0, int rows, int cols) {
    std::vector<Coord> out;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.push_back({row0 + r, col0 + c});
    return out;
}

PatchSpec build_hole(const PatchParams& p) {
    if (p.rows < 1 || p.cols < 1) throw std::invalid_argument("hole block must be at least 1x1");
    Layout layout;
    for (Coord c : block(0, 0, p.rows + 2, p.cols + 2))
        if (c.row == 0 || c.row == p.rows + 1 || c.col == 0 || c.col == p.cols + 1) layout.s_cells.push_back(c);
    layout.u_cells = block(1, 1, p.rows, p.cols);
    layout.attach = Coord{0, p.cols + 2};
    layout.run_order = natural_order(p.m);
    PatchSpec patch = make_patch(ConfigType::hole, place(layout, p.m), p.m);

    const std::vector<std::size_t> exact = left_and_up_edges(patch, first_pieces(patch, layout.u_cells, 2));
    std::vector<std::size_t> pairwise;
    for (std::size_t i = 0; i < patch.edges.size(); ++i) {
        const PatchEdge& e = patch.edges[i];
        // target_b lies right of or below target_a: keep edges where S is that side.
        if (e.between_s_and_u && patch.s.contains(e.target_b)) pairwise.push_back(i);
    }
    finish(patch, exact, pairwise);
    return patch;
}

PatchSpec build_indentation(const PatchParams& p) {
    if (p.rows < 1 || p.cols < 1) throw std::invalid_argument("indentation block must be at least 1x1");
    if (p.sides != 2 && p.sides != 3) throw std::invalid_argument("indentation is enclosed from 2 or 3 sides");
    Layout layout;
    // S covers the top row and left column; with three sides also the bottom
    // row. The open sides face the grid border.
    for (int c = 0; c <= p.cols; ++c) layout.s_cells.push_back({0, c});
    for (int r = 1; r <= p.rows; ++r) layout.s_cells.push_back({r, 0});
    if (p.sides == 3)
        for (int c = 0; c <= p.cols; ++c) layout.s_cells.push_back({p.rows + 1, c});
    layout.u_cells = block(1, 1, p.rows, p.cols);
    layout.attach = Coord{0, p.cols + 1};
    layout.run_order = natural_order(p.m);
    PatchSpec patch = make_patch(ConfigType::indentation, place(layout, p.m), p.m);
    finish(patch, left_and_up_edges(patch, first_pieces(patch, layout.u_cells, 2)), {});
    return patch;
}

PatchSpec build_subsquare(const PatchParams& p) {
    if (p.square < 1) throw std::invalid_argument("subsquare side must be at least 1");
    Layout layout;
    layout.u_cells = block(0, 0, p.square, p.square);
    layout.run_order = natural_order(p.m);
    PatchSpec patch = make_patch(ConfigType::subsquare, place(layout, p.m), p.m);

    std::vector<Polyomino> sets;
    if (!p.decomposition.empty()) {
        for (const auto& cells : p.decomposition) sets.emplace_back(cells);
    } else {
        // Components of U under original edges.
        std::map<Coord, Coord> parent;
        for (Coord c : patch.u.cells()) parent[c] = c;
        const auto find = [&](Coord c) {
            while (parent[c] != c) c = parent[c] = parent[parent[c]];
            return c;
        };
        for (const PatchEdge& e : patch.edges)
            if (!e.is_new) parent[find(e.target_a)] = find(e.target_b);
        std::map<Coord, std::vector<Coord>> groups;
        for (Coord c : patch.u.cells()) groups[find(c)].push_back(c);
        for (auto& [root, cells] : groups) sets.emplace_back(std::move(cells));
    }
    // Must partition U into connected sets whose inner edges are original and
    // whose outer edges are new.
    std::map<Coord, std::size_t> set_of;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!sets[i].is_connected()) throw std::invalid_argument("a stable set is not connected");
        for (Coord c : sets[i].cells()) {
            if (!patch.u.contains(c)) throw std::invalid_argument("a stable set leaves U");
            if (!set_of.emplace(c, i).second) throw std::invalid_argument("stable sets overlap");
        }
    }
    if (set_of.size() != patch.u.size()) throw std::invalid_argument("stable sets do not cover U");
    for (const PatchEdge& e : patch.edges) {
        const bool inside = set_of.at(e.target_a) == set_of.at(e.target_b);
        if (inside == e.is_new) throw std::invalid_argument("decomposition is not into stable sets");
    }
    std::ranges::sort(sets);
    patch.stable_sets = sets;
    patch.z = static_cast<int>(sets.size());

    std::vector<Coord> w;
    for (const Polyomino& t : patch.stable_sets) {
        const Coord first = t.cells().front();  // row-major first cell
        if (first.row > 0 && first.col > 0) w.push_back(first);
    }
    finish(patch, {}, left_and_up_edges(patch, w));
    return patch;
}

}  // namespace

PatchSpec build_patch(ConfigType type, const PatchParams& params) {
    switch (type) {
        case ConfigType::straightline: return build_straightline(params);
        case ConfigType::convexcorners: return build_convexcorners(params);
        case ConfigType::hole: return build_hole(params);
        case ConfigType::indentation: return build_indentation(params);
        case ConfigType::subsquare: return build_subsquare(params);
        case ConfigType::swap_pair: return swap_pair_patch();
    }
    throw std::invalid_argument("unknown configuration type");
}

PatchSpec swap_pair_patch() {
    // Source dominoes {(0,0),(1,0)} and {(0,2),(1,2)}: the upper piece of each
    // is set on top of the other's lower piece.
    std::vector<PatchPiece> pieces{
        {{0, 0}, {0, 0}, 0, 1, false},
        {{1, 2}, {1, 0}, 0, 2, false},
        {{0, 2}, {0, 3}, 0, 2, false},
        {{1, 0}, {1, 3}, 0, 1, false},
    };
    PatchSpec patch = make_patch(ConfigType::swap_pair, std::move(pieces), 2);
    std::vector<std::size_t> both;
    for (std::size_t i = 0; i < patch.edges.size(); ++i) both.push_back(i);
    patch.ordering.reset();
    for (std::size_t idx : both) patch.edges[idx].phase = RevealPhase::pairwise;
    recompute_known(patch);
    return patch;
}

// ---------------------------------------------------------------------------
// Bounds

double prop1_exact(const PatchSpec& patch, int q) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (!patch.ordering) throw std::invalid_argument("patch has no exact ordering");
    if (!satisfies_exact_hypothesis(patch, *patch.ordering))
        throw std::invalid_argument("ordering violates the exact-probability hypothesis; use the pairwise bound");
    return std::pow(static_cast<double>(q), -static_cast<double>(patch.ordering->size()));
}

double prop2_bound(int m_edges, int q) {
    if (m_edges < 0) throw std::invalid_argument("edge count must be non-negative");
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    return std::pow(static_cast<double>(q), -static_cast<double>((m_edges + 1) / 2));
}

double prop2_bound(const PatchSpec& patch, int q) {
    int count = 0;
    for (const PatchEdge& e : patch.edges) {
        if (e.phase != RevealPhase::pairwise) continue;
        if (!e.is_new) throw std::invalid_argument("pairwise bound applied to an original edge");
        if (e.known_a && e.known_b) throw std::invalid_argument("both half-edge colours of an edge are already known");
        ++count;
    }
    return prop2_bound(count, q);
}

double deferred_bound(const PatchSpec& patch, int q) {
    const double exact = patch.ordering ? prop1_exact(patch, q) : 1.0;
    return exact * prop2_bound(patch, q);
}

double hole_border_exponent(const PatchSpec& patch, int q) {
    if (patch.type != ConfigType::hole) throw std::invalid_argument("hole bound applies to hole patches only");
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    const auto b = static_cast<double>(patch.border_edges());
    if (patch.border_edges() % 2 != 0) throw std::logic_error("border of a connected set must be even");
    return std::pow(static_cast<double>(q), 2.0 - 2.0 * patch.m - b / 4.0);
}

double indentation_bound(const PatchSpec& patch, int q) {
    if (patch.type != ConfigType::indentation)
        throw std::invalid_argument("indentation bound applies to indentation patches only");
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    const double qd = static_cast<double>(q);
    return std::min(1.0 / qd, std::pow(qd, -2.0 * (patch.m - 1)));
}

// ---------------------------------------------------------------------------
// Simulation

Estimate estimate_patch_validity(const PatchSpec& patch, int q, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");

    // Only the slots on new edges matter; partners share a slot.
    std::map<SlotKey, std::uint32_t> slot_ids;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> checks;
    const auto id_of = [&](const HalfEdge& h) {
        return slot_ids.emplace(slot_of(h), static_cast<std::uint32_t>(slot_ids.size())).first->second;
    };
    for (const PatchEdge& e : patch.edges)
        if (e.is_new) checks.emplace_back(id_of(e.half_a), id_of(e.half_b));
    const std::size_t slots = slot_ids.size();

    constexpr std::uint64_t kChunks = 64;
    const std::uint64_t chunks = std::min(kChunks, trials);
    std::vector<std::uint64_t> hits(chunks, 0);
    const auto run_chunk = [&](std::uint64_t chunk) {
        const std::uint64_t count = trials / chunks + (chunk < trials % chunks ? 1 : 0);
        Rng rng(derive_seed(seed, chunk));
        std::vector<Color> colour(slots);
        std::uint64_t ok = 0;
        for (std::uint64_t t = 0; t < count; ++t) {
            for (Color& c : colour) c = static_cast<Color>(rng.below(static_cast<std::uint64_t>(q)));
            ok += std::ranges::all_of(checks, [&](const auto& pr) { return colour[pr.first] == colour[pr.second]; });
        }
        hits[chunk] = ok;
    };

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
            });
    }

    Estimate est;
    est.trials = trials;
    est.successes = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
    est.value = static_cast<double>(est.successes) / static_cast<double>(trials);
    est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(trials));
    return est;
}

}  // namespace jigsaw
