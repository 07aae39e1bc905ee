#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>

#include "bcgsemo/archive.hpp"
#include "bcgsemo/problem.hpp"

namespace bcgsemo {

enum class Algorithm { Gsemo, BcGsemo };

std::string_view algorithm_token(Algorithm a); // "gsemo" / "bc-gsemo"
Algorithm parse_algorithm(std::string_view token);

struct TraceSample {
    std::uint64_t evaluations = 0;
    std::size_t archive_size = 0;
    double covered_fraction = 0.0;
};

using TraceObserver = std::function<void(const TraceSample&)>;

struct RunConfig {
    ProblemParams params;
    Algorithm algorithm = Algorithm::Gsemo;
    std::uint64_t t_epoch = 1000;            // BC-GSEMO only
    std::uint64_t budget = 1'000'000'000;    // max fitness evaluations
    std::uint64_t seed = 0;
    std::uint64_t trace_every = 0;           // 0 = no periodic snapshots
    TraceObserver observer;
};

struct RunResult {
    std::uint64_t evaluations = 0;
    bool covered = false;
    Archive final_archive;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::Gsemo;
    ProblemParams params;
    std::size_t max_archive_size = 0;
};

// Observer receives (evaluations, archive size, covered-front fraction) every
// trace_every evaluations and once more at termination (deduplicated when the
// two coincide). Requires cfg.trace_every > 0.
void attach_observer(RunConfig& cfg, TraceObserver observer);

// Block active for the given offspring (both 1-based): blocks cycle
// 1..k, each held for t_epoch consecutive offspring, starting at block 1.
constexpr std::uint64_t active_block_index(std::uint64_t offspring_index, std::uint64_t t_epoch,
                                           std::uint64_t k) {
    return ((offspring_index - 1) / t_epoch) % k + 1;
}

// One uniform random initial individual (evaluation #1), then repeatedly:
// uniform parent from the archive, standard bit mutation, evaluate, archive
// insertion. Stops as soon as the archive covers the whole Pareto front or
// the evaluation budget is exhausted.
RunResult run_gsemo(const RunConfig& cfg);

// Same loop, but mutation is restricted to one block at a time following the
// epoch schedule of active_block_index. Termination may occur mid-epoch.
RunResult run_bc_gsemo(const RunConfig& cfg);

// Dispatch on cfg.algorithm.
RunResult run(const RunConfig& cfg);

} // namespace bcgsemo
