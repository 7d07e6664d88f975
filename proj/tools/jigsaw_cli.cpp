// jigsaw: command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 malformed input (or an invalid
// witness for `verify`), 3 undetermined verdict from `unique`, 4 a corner
// lemma violation found by `poly --check-lemma1`.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
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

using namespace jigsaw;

namespace {

constexpr int kUsage = 1;
constexpr int kMalformed = 2;
constexpr int kUndetermined = 3;
constexpr int kLemmaViolation = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GridColoring load_puzzle(const std::string& path) {
    try {
        return read_puzzle(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

std::string label_text(Coord c) { return std::to_string(c.row) + "," + std::to_string(c.col); }

int cmd_gen(int n, int q, std::uint64_t seed, const std::string& out) {
    emit(out, write_puzzle(generate_puzzle(n, q, seed)));
    return 0;
}

int cmd_solve(const std::string& in, std::uint64_t limit, std::uint64_t budget) {
    const GridColoring gc = load_puzzle(in);
    const PieceBag bag = pieces_of(gc);
    std::optional<Assembly> first;
    std::uint64_t count = 0;
    const SearchStats stats = enumerate_valid(
        bag, gc.n(),
        [&](const Assembly& a) {
            if (!first) first = a;
            return ++count < limit;
        },
        budget);
    if (stats.budget_exhausted)
        std::cout << "solutions >= " << count << " (node budget exhausted)\n";
    else if (!stats.completed)
        std::cout << "solutions >= " << count << "\n";
    else
        std::cout << "solutions " << count << "\n";
    std::cout << "nodes " << stats.nodes << "\n";
    if (first) std::cout << write_witness(*first);
    return 0;
}

int cmd_verify(const std::string& in, const std::string& witness_path) {
    const GridColoring gc = load_puzzle(in);
    Assembly a(1);
    try {
        a = read_witness(read_file(witness_path));
    } catch (const std::exception& e) {
        throw InputError(witness_path + ": " + e.what());
    }
    if (a.n() != gc.n()) throw InputError("witness size does not match the puzzle");
    bool ok = false;
    try {
        ok = verify_assembly(pieces_of(gc), a);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::cout << (ok ? "VALID" : "INVALID") << "\n";
    if (ok && gc.n() > 1) std::cout << (edge_pairing(a) == original_pairing(gc.n()) ? "ORIGINAL" : "NEW") << "\n";
    return ok ? 0 : kMalformed;
}

int cmd_certify(const std::string& in) {
    const GridColoring gc = load_puzzle(in);
    const auto cert = find_certificate(gc);
    if (!cert) {
        std::cout << "NONE\n";
        return 0;
    }
    if (const auto* pair = std::get_if<PairCertificate>(&*cert))
        std::cout << "pair " << label_text(pair->a) << " " << label_text(pair->b) << " shift " << pair->shift << "\n";
    else
        std::cout << "symmetric " << label_text(std::get<SymmetricCertificate>(*cert).label) << "\n";
    std::cout << write_witness(build_swap_witness(gc, *cert));
    return 0;
}

int cmd_unique(const std::string& in, const std::string& mode_name, std::uint64_t budget) {
    const SweepMode mode = parse_mode(mode_name);
    const GridColoring gc = load_puzzle(in);
    if (mode != SweepMode::exact && gc.n() > 1)
        if (const auto cert = find_certificate(gc)) {
            std::cout << "NONUNIQUE\n" << write_witness(build_swap_witness(gc, *cert));
            return 0;
        }
    if (mode == SweepMode::certificate && gc.n() > 1) {
        std::cout << "UNDETERMINED\nno certificate found\n";
        return kUndetermined;
    }
    const UniquenessVerdict v = decide_unique(gc, budget);
    std::cout << to_string(v.kind) << "\n";
    if (v.witness) std::cout << write_witness(*v.witness);
    if (v.kind == Verdict::undetermined) {
        std::cout << v.reason << "\n";
        return kUndetermined;
    }
    return 0;
}

struct SweepArgs {
    std::string n_list;
    std::string q_list;
    std::uint64_t trials = 100;
    std::string mode = "exact";
    std::uint64_t seed = 0;
    std::string out;
    unsigned threads = 1;
    std::uint64_t budget = 50'000'000;
    bool timing = false;
};

int cmd_sweep(const SweepArgs& a) {
    SweepSpec spec;
    spec.n_values = parse_int_list(a.n_list);
    spec.q_values = parse_int_list(a.q_list);
    spec.trials = a.trials;
    spec.mode = parse_mode(a.mode);
    spec.master_seed = a.seed;
    spec.threads = a.threads;
    spec.node_budget = a.budget;
    spec.record_timing = a.timing;
    const auto rows = run_sweep(spec);
    emit(a.out, sweep_csv(rows));
    if (!a.out.empty() && a.out != "-") {
        std::uint64_t witnesses = 0;
        for (const SweepRow& r : rows) witnesses += r.verified_witnesses;
        std::cout << "rows " << rows.size() << ", verified witnesses " << witnesses << "\n";
    }
    return 0;
}

int cmd_poly(int k, bool check) {
    const auto sizes = enumerate_fixed_polyominoes(k);
    std::uint64_t violations = 0;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        std::cout << "size " << s + 1 << ": " << sizes[s].size();
        if (check) {
            std::uint64_t bad = 0;
            for (const Polyomino& p : sizes[s]) bad += !satisfies_corner_lemma(p);
            std::cout << ", violations " << bad;
            violations += bad;
        }
        std::cout << "\n";
    }
    if (check) std::cout << (violations == 0 ? "lemma holds" : "LEMMA VIOLATED") << "\n";
    return violations == 0 ? 0 : kLemmaViolation;
}

struct PatchArgs {
    std::string type = "straightline";
    PatchParams params;
    int q = 4;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

void print_value(const char* name, double v) { std::printf("%-22s %.6g\n", name, v); }

int cmd_patch(const PatchArgs& a) {
    const PatchSpec patch = build_patch(config_type_from_string(a.type), a.params);
    std::printf("%-22s %s\n", "type", to_string(patch.type).c_str());
    std::printf("%-22s %zu\n", "pieces", patch.pieces.size());
    std::printf("%-22s %d\n", "components", patch.m);
    std::printf("%-22s %zu\n", "new edges", patch.new_edge_count());
    std::printf("%-22s %zu\n", "S-U edges", patch.border_edges());
    std::size_t pairwise = 0;
    for (const PatchEdge& e : patch.edges) pairwise += e.phase == RevealPhase::pairwise;
    if (patch.ordering) {
        std::printf("%-22s %zu\n", "exact-phase edges", patch.ordering->size());
        print_value("exact-phase prob", prop1_exact(patch, a.q));
    }
    std::printf("%-22s %zu\n", "pairwise-phase edges", pairwise);
    print_value("pairwise bound", prop2_bound(patch, a.q));
    if (patch.ordering) print_value("deferred bound", deferred_bound(patch, a.q));
    if (patch.type == ConfigType::hole) print_value("hole bound", hole_border_exponent(patch, a.q));
    if (patch.type == ConfigType::indentation) print_value("indentation bound", indentation_bound(patch, a.q));
    if (patch.type == ConfigType::subsquare) std::printf("%-22s %d\n", "stable sets", patch.z);
    if (const auto order = greedy_exact_ordering(patch))
        print_value("all-new exact prob", prop1_exact(with_ordering(patch, *order), a.q));
    const Estimate est = estimate_patch_validity(patch, a.q, a.trials, a.seed, a.threads);
    std::printf("%-22s %.6g +- %.2g (%llu/%llu)\n", "estimate", est.value, est.std_error,
                static_cast<unsigned long long>(est.successes), static_cast<unsigned long long>(est.trials));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random jigsaw puzzles: generation, exact reconstruction, certificates and experiments"};
    app.require_subcommand(1);

    int gen_n = 4, gen_q = 4;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a random puzzle");
    gen->add_option("--n", gen_n, "Grid side")->required()->check(CLI::PositiveNumber);
    gen->add_option("--q", gen_q, "Number of colours")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Seed");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    std::string in, witness;
    std::uint64_t limit = kUnlimited, budget = kUnlimited;
    auto* solve = app.add_subcommand("solve", "Count valid reconstructions and print the first");
    solve->add_option("--in", in, "Puzzle file")->required();
    solve->add_option("--limit", limit, "Stop after this many solutions")->check(CLI::PositiveNumber);
    solve->add_option("--budget", budget, "Node budget");

    auto* verify = app.add_subcommand("verify", "Check a witness against a puzzle");
    verify->add_option("--in", in, "Puzzle file")->required();
    verify->add_option("--witness", witness, "Witness file")->required();

    auto* certify = app.add_subcommand("certify", "Look for a swap certificate of non-uniqueness");
    certify->add_option("--in", in, "Puzzle file")->required();

    std::string mode = "exact";
    auto* unique = app.add_subcommand("unique", "Decide uniqueness of reconstruction");
    unique->add_option("--in", in, "Puzzle file")->required();
    unique->add_option("--mode", mode, "exact, certificate or auto");
    unique->add_option("--budget", budget, "Node budget");

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "Estimate P(unique) over a grid of (n, q)");
    sweep->add_option("--n", sw.n_list, "Comma-separated sides")->required();
    sweep->add_option("--q", sw.q_list, "Comma-separated colour counts")->required();
    sweep->add_option("--trials", sw.trials, "Trials per cell")->check(CLI::PositiveNumber);
    sweep->add_option("--mode", sw.mode, "exact, certificate or auto");
    sweep->add_option("--seed", sw.seed, "Master seed");
    sweep->add_option("--out", sw.out, "CSV file (default stdout)");
    sweep->add_option("--threads", sw.threads, "Worker threads (0 = all cores)");
    sweep->add_option("--budget", sw.budget, "Node budget per trial");
    sweep->add_flag("--timing", sw.timing, "Fill the mean_ms column");

    int poly_k = 8;
    bool check_lemma = false;
    auto* poly = app.add_subcommand("poly", "Enumerate fixed polyominoes");
    poly->add_option("--enumerate", poly_k, "Largest size (1..10)")->required();
    poly->add_flag("--check-lemma1", check_lemma, "Check the corner accounting on every polyomino");

    PatchArgs pa;
    auto* patch = app.add_subcommand("patch", "Configuration patch bounds and simulation");
    patch->add_option("--type", pa.type, "straightline, convexcorners, hole, indentation, subsquare or swap_pair");
    patch->add_option("--ell", pa.params.length, "Row length of a straightline patch");
    patch->add_option("--corners", pa.params.corners, "Convex corners of a convexcorners patch");
    patch->add_option("--rows", pa.params.rows, "Rows of U (hole, indentation)");
    patch->add_option("--cols", pa.params.cols, "Columns of U (hole, indentation)");
    patch->add_option("--sides", pa.params.sides, "Enclosed sides of an indentation (2 or 3)");
    patch->add_option("--k", pa.params.square, "Side of a subsquare patch");
    patch->add_option("--m", pa.params.m, "Number of source components");
    patch->add_option("--q", pa.q, "Number of colours")->check(CLI::PositiveNumber);
    patch->add_option("--trials", pa.trials, "Simulation trials")->check(CLI::PositiveNumber);
    patch->add_option("--seed", pa.seed, "Seed");
    patch->add_option("--threads", pa.threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*gen) return cmd_gen(gen_n, gen_q, gen_seed, gen_out);
        if (*solve) return cmd_solve(in, limit, budget);
        if (*verify) return cmd_verify(in, witness);
        if (*certify) return cmd_certify(in);
        if (*unique) return cmd_unique(in, mode, budget);
        if (*sweep) return cmd_sweep(sw);
        if (*poly) return cmd_poly(poly_k, check_lemma);
        if (*patch) return cmd_patch(pa);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
    return kUsage;
}
