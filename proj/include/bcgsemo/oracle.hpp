#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcgsemo/bitstring.hpp"
#include "bcgsemo/problem.hpp"

namespace bcgsemo::oracle {

// Ground truth obtained by exhaustive enumeration of the search space.
struct FrontOracleResult {
    std::vector<ObjectiveKey> front_keys; // sorted ascending, pairwise incomparable
    std::uint64_t pareto_set_size = 0;    // genomes whose key lies on the front
    std::uint64_t enumerated = 0;         // 2^n
};

// Enumerates all 2^n strings and returns the exact non-dominated key set.
// Domination is decided on scalar objective values computed with
// arbitrary-width integers, independently of the digit comparator.
// Guarded to n <= 20.
FrontOracleResult brute_force_front(const ProblemParams& params);

// Evaluates both objectives by the literal weighted-sum formula (leading
// matches against materialized targets, arbitrary-width arithmetic) and
// compares the scalars. The independent check behind compare().
Dominance bigint_scalar_compare(const BitString& x, const BitString& y,
                                const ProblemParams& params);

// One verification check: name, verdict, human-readable detail.
struct CheckReport {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Closed-form front == brute-force front for every valid (n, k, r) with
// n <= max_n; front size is 2^k whenever r < l.
CheckReport check_front_equivalence(std::uint64_t max_n);

// Exhaustive per-block trichotomy check: for all block lengths <= max_len and
// all r, the (f1, f2) orderings of every distinct block pair follow the
// first-differing-bit case analysis, and equality in one objective implies
// equality in the other.
CheckReport check_block_trichotomy(std::uint64_t max_len);

// Digit comparator vs bigint scalar comparator on pairs_per_set random pairs
// for every valid (n, k, r) with n <= max_n.
CheckReport check_comparator_agreement(std::uint64_t max_n, std::uint64_t pairs_per_set,
                                       std::uint64_t seed);

// min(LO_z1, LO_z2) <= l - r on random blocks, plus base_values equals the
// two-leading-match definition.
CheckReport check_base_value_definition(std::uint64_t samples, std::uint64_t seed);

// The whole suite, in order. Used by the `verify` CLI subcommand.
std::vector<CheckReport> run_verification(std::uint64_t max_n, std::uint64_t pairs_per_set,
                                          std::uint64_t seed);

} // namespace bcgsemo::oracle
