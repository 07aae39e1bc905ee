#include "bcgsemo/algorithm.hpp"

#include <algorithm>
#include <cassert>

#include "bcgsemo/mutation.hpp"
#include "bcgsemo/random_source.hpp"

namespace bcgsemo {

std::string_view algorithm_token(Algorithm a) {
    return a == Algorithm::Gsemo ? "gsemo" : "bc-gsemo";
}

Algorithm parse_algorithm(std::string_view token) {
    if (token == "gsemo")
        return Algorithm::Gsemo;
    if (token == "bc-gsemo")
        return Algorithm::BcGsemo;
    throw std::invalid_argument("unknown algorithm: " + std::string(token));
}

void attach_observer(RunConfig& cfg, TraceObserver observer) {
    if (cfg.trace_every == 0)
        throw std::invalid_argument("attach_observer: trace_every must be set");
    cfg.observer = std::move(observer);
}

namespace {

// Sorted front keys plus incremental coverage tracking. Front keys can never
// be evicted from the archive (they are globally non-dominated, and an
// equal-key replacement preserves the key), so a counter of distinct front
// keys inserted so far decides coverage immediately after each insertion.
class FrontCoverage {
  public:
    explicit FrontCoverage(const ProblemParams& params) {
        for (FrontPoint& p : pareto_front(params))
            keys_.push_back(std::move(p.key));
        std::sort(keys_.begin(), keys_.end());
    }

    void on_insert(const ObjectiveKey& key, const InsertOutcome& outcome) {
        if (!outcome.accepted)
            return;
        if (!std::binary_search(keys_.begin(), keys_.end(), key))
            return;
        // An equal-key replacement re-inserts a key that was already counted.
        for (const ObjectiveKey& removed : outcome.removed) {
            if (removed == key)
                return;
        }
        ++covered_;
    }

    bool covered() const { return covered_ == keys_.size(); }
    double fraction() const {
        return static_cast<double>(covered_) / static_cast<double>(keys_.size());
    }
    std::size_t front_size() const { return keys_.size(); }

  private:
    std::vector<ObjectiveKey> keys_;
    std::size_t covered_ = 0;
};

RunResult run_loop(const RunConfig& cfg, Algorithm algorithm) {
    if (cfg.budget < 1)
        throw std::invalid_argument("run: budget must be at least 1");
    if (algorithm == Algorithm::BcGsemo && cfg.t_epoch < 1)
        throw std::invalid_argument("run: t_epoch must be at least 1");
    if (cfg.observer && cfg.trace_every == 0)
        throw std::invalid_argument("run: observer requires trace_every");

    const ProblemParams& params = cfg.params;
    const std::uint64_t block_length = params.block_length();
    RandomSource rng(cfg.seed);
    Archive archive(params);
    FrontCoverage coverage(params);

    std::uint64_t evaluations = 0;
    std::size_t max_archive_size = 0;
    std::uint64_t last_traced = std::uint64_t(-1);

    const auto emit_trace = [&](bool terminal) {
        if (!cfg.observer)
            return;
        if (!terminal && evaluations % cfg.trace_every != 0)
            return;
        if (evaluations == last_traced)
            return;
        cfg.observer(TraceSample{evaluations, archive.size(), coverage.fraction()});
        last_traced = evaluations;
    };

    const auto submit = [&](BitString&& genome) {
        ObjectiveKey key = evaluate(genome, params);
        ++evaluations;
        const InsertOutcome outcome = archive.try_insert(std::move(genome), key);
        coverage.on_insert(key, outcome);
        max_archive_size = std::max(max_archive_size, archive.size());
        emit_trace(false);
    };

    submit(random_bitstring(params.n(), rng));

    std::uint64_t offspring = 0;
    while (!coverage.covered() && evaluations < cfg.budget) {
        const std::uint64_t parent_index = rng.next_below(archive.size());
        const BitString& parent = archive.entries()[parent_index].genome;
        ++offspring;
        if (algorithm == Algorithm::Gsemo) {
            submit(standard_mutation(parent, rng));
        } else {
            const std::uint64_t block = active_block_index(offspring, cfg.t_epoch, params.k());
            submit(block_mutation(parent, block, block_length, rng));
        }
    }

    assert(evaluations == 1 + offspring);
    assert(!coverage.covered() ||
           [&] {
               std::vector<ObjectiveKey> front;
               for (FrontPoint& p : pareto_front(params))
                   front.push_back(std::move(p.key));
               return archive.covers_front(front);
           }());

    emit_trace(true);
    RunResult result{evaluations, coverage.covered(), std::move(archive),
                     cfg.seed,    algorithm,          params};
    result.max_archive_size = max_archive_size;
    return result;
}

} // namespace

RunResult run_gsemo(const RunConfig& cfg) {
    if (cfg.algorithm != Algorithm::Gsemo)
        throw std::invalid_argument("run_gsemo: config names a different algorithm");
    return run_loop(cfg, Algorithm::Gsemo);
}

RunResult run_bc_gsemo(const RunConfig& cfg) {
    if (cfg.algorithm != Algorithm::BcGsemo)
        throw std::invalid_argument("run_bc_gsemo: config names a different algorithm");
    return run_loop(cfg, Algorithm::BcGsemo);
}

RunResult run(const RunConfig& cfg) {
    return cfg.algorithm == Algorithm::Gsemo ? run_gsemo(cfg) : run_bc_gsemo(cfg);
}

} // namespace bcgsemo
