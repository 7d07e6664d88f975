#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>

#include "jigsaw/certificates.hpp"
#include "jigsaw/configs.hpp"
#include "jigsaw/core.hpp"
#include "jigsaw/harness.hpp"
#include "jigsaw/io.hpp"
#include "jigsaw/polyomino.hpp"
#include "jigsaw/solver.hpp"

namespace py = pybind11;
using namespace jigsaw;

namespace {

using Cell = std::pair<int, int>;

Polyomino to_poly(const std::vector<Cell>& cells) {
    std::vector<Coord> out;
    for (const auto& [r, c] : cells) out.push_back({r, c});
    return Polyomino(std::move(out));
}

std::vector<Cell> cells_of(const Polyomino& p) {
    std::vector<Cell> out;
    for (Coord c : p.cells()) out.emplace_back(c.row, c.col);
    return out;
}

RectSide side_from_string(const std::string& s) {
    if (s == "left") return RectSide::left;
    if (s == "right") return RectSide::right;
    if (s == "top") return RectSide::top;
    if (s == "bottom") return RectSide::bottom;
    throw std::invalid_argument("side must be left, right, top or bottom");
}

py::dict certificate_dict(const GridColoring& gc, const Certificate& cert) {
    py::dict d;
    if (const auto* p = std::get_if<PairCertificate>(&cert)) {
        d["kind"] = "pair";
        d["a"] = Cell{p->a.row, p->a.col};
        d["b"] = Cell{p->b.row, p->b.col};
        d["shift"] = p->shift;
    } else {
        const Coord l = std::get<SymmetricCertificate>(cert).label;
        d["kind"] = "symmetric";
        d["a"] = Cell{l.row, l.col};
    }
    d["witness"] = write_witness(build_swap_witness(gc, cert));
    return d;
}

}  // namespace

PYBIND11_MODULE(jigsaw, m) {
    m.doc() = "Random jigsaw puzzles: generation, exact reconstruction, certificates and experiments";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<GridColoring>(m, "Puzzle")
        .def_property_readonly("n", &GridColoring::n)
        .def_property_readonly("q", &GridColoring::q)
        .def_property_readonly("horizontal",
                               [](const GridColoring& g) {
                                   return std::vector<Color>(g.horizontal_slots().begin(), g.horizontal_slots().end());
                               })
        .def_property_readonly("vertical",
                               [](const GridColoring& g) {
                                   return std::vector<Color>(g.vertical_slots().begin(), g.vertical_slots().end());
                               })
        .def("pieces",
             [](const GridColoring& g) {
                 std::vector<std::pair<Cell, std::array<Color, 4>>> out;
                 for (const Piece& p : pieces_of(g)) out.push_back({{p.label.row, p.label.col}, p.tuple});
                 return out;
             })
        .def("to_text", [](const GridColoring& g) { return write_puzzle(g); })
        .def_static("from_text", [](const std::string& text) { return read_puzzle(text); })
        .def(py::self == py::self);

    m.def("generate_puzzle", &generate_puzzle, py::arg("n"), py::arg("q"), py::arg("seed"));
    m.def(
        "make_puzzle",
        [](int n, int q, std::vector<Color> h, std::vector<Color> v) { return GridColoring(n, q, std::move(h), std::move(v)); },
        py::arg("n"), py::arg("q"), py::arg("horizontal"), py::arg("vertical"));

    m.def(
        "count_valid",
        [](const GridColoring& g, std::optional<std::uint64_t> limit, std::optional<std::uint64_t> budget) {
            py::gil_scoped_release release;
            const CountResult r =
                count_valid(pieces_of(g), g.n(), limit.value_or(kUnlimited), budget.value_or(kUnlimited));
            return std::pair(r.count, r.at_least || r.budget_exhausted);
        },
        py::arg("puzzle"), py::arg("limit") = py::none(), py::arg("budget") = py::none(),
        "Raw number of valid placements and whether it is only a lower bound.");

    m.def(
        "decide_unique",
        [](const GridColoring& g, std::optional<std::uint64_t> budget) {
            UniquenessVerdict v;
            {
                py::gil_scoped_release release;
                v = decide_unique(g, budget.value_or(kUnlimited));
            }
            return std::pair(to_string(v.kind),
                             v.witness ? std::optional<std::string>(write_witness(*v.witness)) : std::nullopt);
        },
        py::arg("puzzle"), py::arg("budget") = py::none());

    m.def(
        "verify",
        [](const GridColoring& g, const std::string& witness) {
            return verify_assembly(pieces_of(g), read_witness(witness));
        },
        py::arg("puzzle"), py::arg("witness"));

    m.def(
        "find_certificate",
        [](const GridColoring& g) -> py::object {
            const auto cert = find_certificate(g);
            if (!cert) return py::none();
            return certificate_dict(g, *cert);
        },
        py::arg("puzzle"));

    m.def("birthday_upper_bound", &birthday_upper_bound, py::arg("n"), py::arg("q"));

    m.def(
        "corner_census",
        [](const std::vector<Cell>& cells) {
            const CornerCensus c = corner_census(to_poly(cells));
            return std::pair(c.concave, c.convex);
        },
        py::arg("cells"), "(concave, convex) turns of the outer border; concave means a 90 degree interior angle.");
    m.def(
        "side_corner_census",
        [](const std::vector<Cell>& cells, const std::string& side) {
            const CornerCensus c = side_corner_census(to_poly(cells), side_from_string(side));
            return std::pair(c.concave, c.convex);
        },
        py::arg("cells"), py::arg("side"));
    m.def(
        "find_holes",
        [](const std::vector<Cell>& cells) {
            std::vector<std::vector<Cell>> out;
            for (const Polyomino& h : find_holes(to_poly(cells))) out.push_back(cells_of(h));
            return out;
        },
        py::arg("cells"));
    m.def(
        "find_indentations",
        [](const std::vector<Cell>& cells) {
            std::vector<std::vector<Cell>> out;
            for (const Polyomino& h : find_indentations(to_poly(cells))) out.push_back(cells_of(h));
            return out;
        },
        py::arg("cells"));
    m.def(
        "fixed_polyomino_counts",
        [](int k) {
            std::vector<std::size_t> out;
            for (const auto& s : enumerate_fixed_polyominoes(k)) out.push_back(s.size());
            return out;
        },
        py::arg("k"));
    m.def(
        "corner_lemma_violations",
        [](int k) {
            std::size_t bad = 0;
            for (const auto& s : enumerate_fixed_polyominoes(k))
                for (const Polyomino& p : s) bad += !satisfies_corner_lemma(p);
            return bad;
        },
        py::arg("k"));

    m.def(
        "config_constants",
        [](const std::string& epsilon) {
            const ConfigConstants c = config_constants(parse_rational(epsilon));
            py::dict d;
            d["ell"] = c.ell;
            d["s"] = c.s;
            d["k"] = std::pair(c.k.num, c.k.den);
            return d;
        },
        py::arg("epsilon"), "Exact constants for epsilon given as a decimal or fraction string, e.g. '0.2'.");

    m.def(
        "patch",
        [](const std::string& type, int q, std::uint64_t trials, std::uint64_t seed, int length, int corners, int rows,
           int cols, int sides, int square, int components) {
            PatchParams p;
            p.length = length;
            p.corners = corners;
            p.rows = rows;
            p.cols = cols;
            p.sides = sides;
            p.square = square;
            p.m = components;
            const PatchSpec patch = build_patch(config_type_from_string(type), p);
            py::dict d;
            d["new_edges"] = patch.new_edge_count();
            d["border_edges"] = patch.border_edges();
            d["pairwise_bound"] = prop2_bound(patch, q);
            if (patch.ordering) {
                d["exact_phase_edges"] = patch.ordering->size();
                d["deferred_bound"] = deferred_bound(patch, q);
            }
            if (const auto order = greedy_exact_ordering(patch))
                d["all_new_exact"] = prop1_exact(with_ordering(patch, *order), q);
            if (patch.type == ConfigType::hole) d["hole_bound"] = hole_border_exponent(patch, q);
            if (patch.type == ConfigType::indentation) d["indentation_bound"] = indentation_bound(patch, q);
            if (patch.type == ConfigType::subsquare) d["stable_sets"] = patch.z;
            Estimate e;
            {
                py::gil_scoped_release release;
                e = estimate_patch_validity(patch, q, trials, seed);
            }
            d["estimate"] = e.value;
            d["std_error"] = e.std_error;
            return d;
        },
        py::arg("type"), py::arg("q"), py::arg("trials") = 100000, py::arg("seed") = 0, py::arg("length") = 4,
        py::arg("corners") = 4, py::arg("rows") = 1, py::arg("cols") = 1, py::arg("sides") = 3, py::arg("square") = 4,
        py::arg("m") = 1);

    m.def(
        "run_sweep",
        [](std::vector<int> n_values, std::vector<int> q_values, std::uint64_t trials, const std::string& mode,
           std::uint64_t seed, unsigned threads, std::uint64_t budget) {
            SweepSpec spec;
            spec.n_values = std::move(n_values);
            spec.q_values = std::move(q_values);
            spec.trials = trials;
            spec.mode = parse_mode(mode);
            spec.master_seed = seed;
            spec.threads = threads;
            spec.node_budget = budget;
            py::gil_scoped_release release;
            return sweep_csv(run_sweep(spec));
        },
        py::arg("n"), py::arg("q"), py::arg("trials"), py::arg("mode") = "exact", py::arg("seed") = 0,
        py::arg("threads") = 1, py::arg("budget") = 50'000'000, "Runs a sweep and returns the CSV text.");
}
