#include "bcgsemo/archive.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bcgsemo {

InsertOutcome Archive::try_insert(BitString genome, ObjectiveKey key) {
    assert(evaluate(genome, params_) == key);

    for (const ArchiveEntry& entry : entries_) {
        if (compare(entry.key, key) == Dominance::FirstStronglyDominates)
            return InsertOutcome{};
    }

    InsertOutcome outcome;
    outcome.accepted = true;
    // Single pass in key order; the removal conditions of the entries are
    // independent of one another, so the order cannot change the result.
    std::erase_if(entries_, [&](const ArchiveEntry& entry) {
        const Dominance d = compare(key, entry.key);
        if (d == Dominance::FirstStronglyDominates || d == Dominance::Equal) {
            outcome.removed.push_back(entry.key);
            return true;
        }
        return false;
    });

    const auto pos = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const ArchiveEntry& entry, const ObjectiveKey& k) { return entry.key < k; });
    entries_.insert(pos, ArchiveEntry{std::move(genome), std::move(key)});

#ifndef NDEBUG
    check_invariants();
#endif
    return outcome;
}

bool Archive::covers_front(std::span<const ObjectiveKey> front) const {
    for (const ObjectiveKey& key : front) {
        if (!contains_key(key))
            return false;
    }
    return true;
}

bool Archive::contains_key(const ObjectiveKey& key) const {
    const auto pos = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const ArchiveEntry& entry, const ObjectiveKey& k) { return entry.key < k; });
    return pos != entries_.end() && pos->key == key;
}

void Archive::check_invariants() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (evaluate(entries_[i].genome, params_) != entries_[i].key)
            throw std::logic_error("Archive: stored key does not match genome");
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            if (compare(entries_[i].key, entries_[j].key) != Dominance::Incomparable)
                throw std::logic_error("Archive: entries are not pairwise non-dominating");
        }
    }
    if (!std::is_sorted(entries_.begin(), entries_.end(),
                        [](const ArchiveEntry& a, const ArchiveEntry& b) { return a.key < b.key; }))
        throw std::logic_error("Archive: entries are not sorted by key");
}

} // namespace bcgsemo
