#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bcgsemo/bitstring.hpp"
#include "bcgsemo/problem.hpp"

namespace bcgsemo {

struct ArchiveEntry {
    BitString genome;
    ObjectiveKey key; // always evaluate(genome)
};

struct InsertOutcome {
    bool accepted = false;
    std::vector<ObjectiveKey> removed; // empty whenever accepted is false
};

// The optimizer population: mutually non-dominating entries, kept sorted by
// ObjectiveKey so iteration order (and therefore parent selection) is
// deterministic.
class Archive {
  public:
    explicit Archive(ProblemParams params) : params_(std::move(params)) {}

    // Insertion rule: reject iff some entry strongly dominates the candidate;
    // otherwise insert it and remove every entry it weakly dominates. An
    // incumbent with an equal key is removed and replaced by the candidate,
    // which changes the stored genome but never the key set.
    InsertOutcome try_insert(BitString genome, ObjectiveKey key);

    // True iff every key of `front` is present.
    bool covers_front(std::span<const ObjectiveKey> front) const;

    bool contains_key(const ObjectiveKey& key) const;

    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const ProblemParams& params() const { return params_; }

    // Pairwise non-domination; throws std::logic_error on violation.
    void check_invariants() const;

  private:
    ProblemParams params_;
    std::vector<ArchiveEntry> entries_; // sorted ascending by key
};

} // namespace bcgsemo
