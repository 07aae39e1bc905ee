#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bcgsemo/bitstring.hpp"

namespace bcgsemo {

using uint128 = unsigned __int128;

std::string uint128_to_string(uint128 value);

// Parameters of one member of the blockwise bi-objective leading-ones family:
// n bits split into k blocks of length l = n/k, with two per-block targets
// z1 = 1^l and z2 = 1^(l-r) 0^r. The constructor rejects parameter sets whose
// scalarized objectives would not fit in 128 bits (2*k*log2(l+1) <= 126), so
// all downstream arithmetic is exact without arbitrary precision.
class ProblemParams {
  public:
    ProblemParams(std::uint64_t n, std::uint64_t k, std::uint64_t r);

    std::uint64_t n() const { return n_; }
    std::uint64_t k() const { return k_; }
    std::uint64_t r() const { return r_; }
    std::uint64_t block_length() const { return block_length_; } // l = n/k

    // The two per-block targets, materialized (l bits each).
    std::vector<std::uint8_t> target_one() const;  // z1 = 1^l
    std::vector<std::uint8_t> target_conflict() const; // z2 = 1^(l-r) 0^r

    bool operator==(const ProblemParams&) const = default;

  private:
    std::uint64_t n_ = 0;
    std::uint64_t k_ = 0;
    std::uint64_t r_ = 0;
    std::uint64_t block_length_ = 0;
};

// Per-block pair of base objective values:
//   f1 = (l+1)*LO_{z1} + LO_{z2},  f2 = (l+1)*LO_{z2} + LO_{z1}.
// Both are < (l+1)^2, which is what makes blockwise digit comparison exact.
struct BaseValuePair {
    std::uint64_t f1 = 0;
    std::uint64_t f2 = 0;

    friend auto operator<=>(const BaseValuePair&, const BaseValuePair&) = default;
};

// The digit expansion of the objective vector in base (l+1)^2, one
// BaseValuePair per block, block 1 first. Exact and overflow-free; ordering
// is lexicographic over the digit pairs, which gives the archive a
// deterministic iteration order.
struct ObjectiveKey {
    boost::container::small_vector<BaseValuePair, 8> blocks;

    friend bool operator==(const ObjectiveKey& a, const ObjectiveKey& b) {
        return a.blocks.size() == b.blocks.size() &&
               std::equal(a.blocks.begin(), a.blocks.end(), b.blocks.begin());
    }
    friend bool operator<(const ObjectiveKey& a, const ObjectiveKey& b) {
        return std::lexicographical_compare(a.blocks.begin(), a.blocks.end(), b.blocks.begin(),
                                            b.blocks.end());
    }
};

enum class Dominance {
    FirstStronglyDominates,  // first argument weakly dominates and is strictly better somewhere
    SecondStronglyDominates,
    Equal,
    Incomparable,
};

// Swaps the roles of the two arguments.
constexpr Dominance flipped(Dominance d) {
    switch (d) {
    case Dominance::FirstStronglyDominates: return Dominance::SecondStronglyDominates;
    case Dominance::SecondStronglyDominates: return Dominance::FirstStronglyDominates;
    default: return d;
    }
}

const char* to_string(Dominance d);

// Number of leading positions in which block and target agree; 0 if they
// already differ at the first position. Both spans must have equal length.
std::size_t leading_match(std::span<const std::uint8_t> block,
                          std::span<const std::uint8_t> target);

// Base values of one block. Computed by a single scan exploiting that the two
// targets agree on the first l-r positions; tests pin the equivalence with the
// definition via leading_match against materialized targets.
BaseValuePair base_values(std::span<const std::uint8_t> block, const ProblemParams& params);

// Full evaluation: digit expansion of (f1, f2) with one BaseValuePair per block.
ObjectiveKey evaluate(const BitString& x, const ProblemParams& params);
ObjectiveKey evaluate(std::span<const std::uint8_t> bits, const ProblemParams& params);

// The scalar objective values reconstructed from a key:
//   f_m = sum_b (l+1)^{2(k-b)} * blocks[b].f_m.
// Exists for logging and oracle cross-checks; comparisons go through compare().
struct ScalarObjectives {
    uint128 f1 = 0;
    uint128 f2 = 0;
};
ScalarObjectives scalarize(const ObjectiveKey& key, const ProblemParams& params);

// Dominance between two objective keys of equal block count, decided by
// lexicographic comparison of the per-block digits (first differing digit per
// objective decides that objective's order). Identical to comparing the
// scalarized values, without ever leaving 64-bit arithmetic.
Dominance compare(const ObjectiveKey& a, const ObjectiveKey& b);

struct FrontPoint {
    ObjectiveKey key;
    BitString witness;
};

// The closed-form Pareto front: the keys of all 2^k strings whose blocks are
// each chosen from {z1, z2}, deduplicated, sorted by descending f1. One
// witness string per key.
std::vector<FrontPoint> pareto_front(const ProblemParams& params);

} // namespace bcgsemo
