#include "jigsaw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <thread>

#include "jigsaw/certificates.hpp"
#include "jigsaw/rng.hpp"

namespace jigsaw {

std::string to_string(SweepMode m) {
    switch (m) {
        case SweepMode::exact: return "exact";
        case SweepMode::certificate: return "certificate";
        case SweepMode::automatic: return "auto";
    }
    return "?";
}

SweepMode parse_mode(const std::string& name) {
    if (name == "exact") return SweepMode::exact;
    if (name == "certificate") return SweepMode::certificate;
    if (name == "auto") return SweepMode::automatic;
    throw std::invalid_argument("unknown mode '" + name + "' (expected exact, certificate or auto)");
}

std::uint64_t derive_trial_seed(std::uint64_t master, int n, int q, std::uint64_t trial) {
    return derive_seed(derive_seed(derive_seed(master, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(q)),
                       trial);
}

namespace {

void check_witness(const GridColoring& gc, const PieceBag& bag, const Assembly& witness) {
    if (!verify_assembly(bag, witness)) throw std::logic_error("non-uniqueness witness is not a valid reconstruction");
    if (edge_pairing(witness) == original_pairing(gc.n()))
        throw std::logic_error("non-uniqueness witness reproduces the original pairing");
}

}  // namespace

TrialOutcome classify_trial(int n, int q, std::uint64_t seed, SweepMode mode, std::uint64_t node_budget) {
    const GridColoring gc = generate_puzzle(n, q, seed);
    TrialOutcome out;
    if (n == 1) {
        out.verdict = Verdict::unique;
        return out;
    }
    const PieceBag bag = pieces_of(gc);
    if (mode != SweepMode::exact) {
        if (const auto cert = find_certificate(gc)) {
            check_witness(gc, bag, build_swap_witness(gc, *cert));
            out.verdict = Verdict::non_unique;
            out.from_certificate = true;
            out.witness_verified = true;
            return out;
        }
        if (mode == SweepMode::certificate) return out;
    }
    const UniquenessVerdict v = decide_unique(gc, node_budget);
    out.verdict = v.kind;
    if (v.kind == Verdict::non_unique) {
        if (!v.witness) throw std::logic_error("NonUnique verdict without witness");
        check_witness(gc, bag, *v.witness);
        out.witness_verified = true;
    }
    return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (spec.n_values.empty() || spec.q_values.empty()) throw std::invalid_argument("empty n or q list");
    for (int n : spec.n_values)
        if (n < 1) throw std::invalid_argument("n must be at least 1");
    for (int q : spec.q_values)
        if (q < 1) throw std::invalid_argument("q must be at least 1");

    std::vector<std::pair<int, int>> cells;
    for (int n : spec.n_values)
        for (int q : spec.q_values) cells.emplace_back(n, q);
    std::ranges::sort(cells);
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    struct Job {
        std::size_t cell;
        std::uint64_t trial;
    };
    std::vector<Job> jobs;
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (std::uint64_t t = 0; t < spec.trials; ++t) jobs.push_back({c, t});
    std::vector<TrialOutcome> outcomes(jobs.size());
    std::vector<double> millis(jobs.size(), 0.0);

    const auto run_job = [&](std::size_t i) {
        const auto [n, q] = cells[jobs[i].cell];
        const auto start = std::chrono::steady_clock::now();
        outcomes[i] = classify_trial(n, q, derive_trial_seed(spec.master_seed, n, q, jobs[i].trial), spec.mode,
                                     spec.node_budget);
        millis[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    unsigned threads = spec.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : spec.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < jobs.size() && !failed; i = next++) {
                        try {
                            run_job(i);
                        } catch (...) {
                            if (!failed.exchange(true)) failure = std::current_exception();
                        }
                    }
                });
        }
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<SweepRow> rows(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        rows[c].n = cells[c].first;
        rows[c].q = cells[c].second;
        rows[c].mode = spec.mode;
        rows[c].trials = spec.trials;
        rows[c].master_seed = spec.master_seed;
    }
    std::vector<double> total_ms(cells.size(), 0.0);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        SweepRow& row = rows[jobs[i].cell];
        const TrialOutcome& o = outcomes[i];
        switch (o.verdict) {
            case Verdict::unique: ++row.unique; break;
            case Verdict::non_unique: ++row.nonunique; break;
            case Verdict::undetermined: ++row.undetermined; break;
        }
        row.verified_witnesses += o.witness_verified;
        row.certificates += o.from_certificate;
        total_ms[jobs[i].cell] += millis[i];
    }
    if (spec.record_timing)
        for (std::size_t c = 0; c < cells.size(); ++c)
            rows[c].mean_ms = total_ms[c] / static_cast<double>(spec.trials);
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.q) + "," + to_string(r.mode) + "," +
               std::to_string(r.trials) + "," + std::to_string(r.unique) + "," + std::to_string(r.nonunique) + "," +
               std::to_string(r.undetermined) + "," + std::to_string(r.master_seed) + ",";
        if (r.mean_ms) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", *r.mean_ms);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        int v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last || v < 1)
            throw std::invalid_argument("expected a comma-separated list of positive integers: '" + text + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

}  // namespace jigsaw
