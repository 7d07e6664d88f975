#pragma once

// Seeded uniqueness sweeps over (n, q) grids of puzzle sizes and colour counts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jigsaw/solver.hpp"

namespace jigsaw {

/// exact: backtracking search. certificate: swap certificates only, with "no
/// certificate" reported as undetermined. auto: certificate first, then exact
/// search within the node budget.
enum class SweepMode { exact, certificate, automatic };

std::string to_string(SweepMode m);
/// Accepts "exact", "certificate" and "auto".
SweepMode parse_mode(const std::string& name);

struct SweepSpec {
    std::vector<int> n_values;
    std::vector<int> q_values;
    std::uint64_t trials = 1;
    SweepMode mode = SweepMode::exact;
    std::uint64_t master_seed = 0;
    std::uint64_t node_budget = 50'000'000;
    unsigned threads = 1;  ///< 0 = hardware concurrency
    bool record_timing = false;
};

struct SweepRow {
    int n = 0;
    int q = 0;
    SweepMode mode = SweepMode::exact;
    std::uint64_t trials = 0;
    std::uint64_t unique = 0;
    std::uint64_t nonunique = 0;
    std::uint64_t undetermined = 0;
    std::uint64_t master_seed = 0;
    std::optional<double> mean_ms;  ///< only with record_timing
    std::uint64_t verified_witnesses = 0;  ///< NonUnique witnesses checked inline
    std::uint64_t certificates = 0;        ///< of which came from certificates
};

/// derive_seed(derive_seed(derive_seed(master, n), q), trial).
std::uint64_t derive_trial_seed(std::uint64_t master, int n, int q, std::uint64_t trial);

struct TrialOutcome {
    Verdict verdict = Verdict::undetermined;
    bool from_certificate = false;
    bool witness_verified = false;
};

/// Generates the puzzle for `seed` and classifies it. Every NonUnique witness
/// is checked with verify_assembly and against the original pairing; a failed
/// check throws std::logic_error.
TrialOutcome classify_trial(int n, int q, std::uint64_t seed, SweepMode mode, std::uint64_t node_budget);

/// One row per (n, q), sorted by (n, q). The rows do not depend on
/// spec.threads. Throws std::invalid_argument for an invalid spec.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr const char* kCsvHeader = "n,q,mode,trials,unique,nonunique,undetermined,master_seed,mean_ms";

/// Header plus one line per row. mean_ms is empty when not recorded.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Comma-separated positive integers, e.g. "1,2,4".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace jigsaw
