#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bcgsemo/algorithm.hpp"

namespace bcgsemo {

// One sweep: the cartesian product of the value lists, runs_per_cell seeded
// trials per valid cell. Cells whose (n, k) violates divisibility or whose
// r >= n/k are skipped with a notice, not an error.
struct SweepConfig {
    std::vector<std::uint64_t> n_values;
    std::vector<std::uint64_t> k_values;
    std::vector<std::uint64_t> r_values;
    std::vector<Algorithm> algorithms;
    std::uint64_t t_epoch = 1000;
    std::uint32_t runs_per_cell = 30;
    std::uint64_t base_seed = 1;
    std::uint64_t budget = 1'000'000'000;
    unsigned jobs = 0; // 0 = hardware concurrency
};

struct RawRow {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t r = 0;
    Algorithm algorithm = Algorithm::Gsemo;
    std::uint64_t t_epoch = 0; // 0 for GSEMO (not applicable)
    std::uint64_t seed = 0;
    std::uint32_t run_index = 0;
    std::uint64_t evaluations = 0;
    bool covered = false;
    std::size_t final_pop_size = 0;
};

struct CellSummary {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t r = 0;
    Algorithm algorithm = Algorithm::Gsemo;
    std::uint64_t t_epoch = 0;
    std::uint32_t runs = 0;
    double mean_evals = 0.0;
    double stderr_evals = 0.0; // standard error of the mean, 0 for a single run
    std::uint32_t budget_hits = 0;
    bool censored = false; // any run hit the budget; mean then clamps at budget
};

struct SweepOutput {
    std::vector<RawRow> raw;            // sorted by (n, k, r, algo, run_index)
    std::vector<CellSummary> summaries; // same cell order
    std::vector<std::string> notices;   // skipped cells etc.
};

// Pure mixing function of the full cell coordinates and the run index;
// stable across releases. algorithm_id is 1 for GSEMO, 2 for BC-GSEMO;
// t_epoch enters as 0 for GSEMO.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t n, std::uint64_t k,
                          std::uint64_t r, std::uint64_t algorithm_id, std::uint64_t t_epoch,
                          std::uint64_t run_index);

std::uint64_t algorithm_seed_id(Algorithm a);

// Executes every trial of the sweep, up to cfg.jobs concurrently. Trials are
// fully independent (own RandomSource and Archive); output order is fixed by
// the trial list, not by completion order.
SweepOutput run_sweep(const SweepConfig& cfg);

// Per-cell mean / standard error over rows that are already grouped by cell
// (as produced by run_sweep).
std::vector<CellSummary> summarize(const std::vector<RawRow>& rows);

// CSV emission. Both files start with a `# generator=...` comment naming the
// pseudorandom generator, followed by the fixed header.
extern const char* const kRawCsvHeader;
extern const char* const kSummaryCsvHeader;
void write_raw_csv(std::ostream& out, const std::vector<RawRow>& rows);
void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summaries);
std::string format_raw_row(const RawRow& row);

// Key/value sweep configuration file: `key = value` lines, lists separated by
// commas, `#` comments. Unknown keys are rejected.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

} // namespace bcgsemo
