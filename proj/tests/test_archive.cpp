#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "bcgsemo/archive.hpp"
#include "bcgsemo/mutation.hpp"
#include "bcgsemo/random_source.hpp"

using namespace bcgsemo;

namespace {

// n=2, k=1, r=1 playground: keys are single (f1,f2) pairs.
const ProblemParams kTiny(2, 1, 1);

struct Candidate {
    BitString genome;
    ObjectiveKey key;
};

Candidate candidate(const char* bits) {
    BitString genome = BitString::parse(bits);
    ObjectiveKey key = evaluate(genome, kTiny);
    return Candidate{std::move(genome), std::move(key)};
}

std::vector<ObjectiveKey> key_set(const Archive& archive) {
    std::vector<ObjectiveKey> keys;
    for (const ArchiveEntry& entry : archive.entries())
        keys.push_back(entry.key);
    return keys;
}

// Reference insert rule, straight from the acceptance condition: reject iff
// some entry strongly dominates y; otherwise drop everything y weakly
// dominates (equality included) and add y. Works on plain key lists, in any
// scan order.
struct RefOutcome {
    bool accepted;
    std::vector<ObjectiveKey> kept;
    std::vector<ObjectiveKey> removed;
};

RefOutcome reference_insert(std::vector<ObjectiveKey> entries, const ObjectiveKey& y) {
    for (const ObjectiveKey& w : entries) {
        if (compare(w, y) == Dominance::FirstStronglyDominates)
            return RefOutcome{false, std::move(entries), {}};
    }
    RefOutcome out{true, {}, {}};
    for (ObjectiveKey& z : entries) {
        const Dominance d = compare(y, z);
        if (d == Dominance::FirstStronglyDominates || d == Dominance::Equal)
            out.removed.push_back(std::move(z));
        else
            out.kept.push_back(std::move(z));
    }
    out.kept.push_back(y);
    return out;
}

} // namespace

TEST_CASE("insert into an empty archive always succeeds") {
    Archive archive(kTiny);
    auto c = candidate("01");
    const InsertOutcome outcome = archive.try_insert(c.genome, c.key);
    CHECK(outcome.accepted);
    CHECK(outcome.removed.empty());
    CHECK(archive.size() == 1);
}

TEST_CASE("a strongly dominated candidate is rejected and nothing changes") {
    Archive archive(kTiny);
    auto strong = candidate("11"); // key (7,5)
    archive.try_insert(strong.genome, strong.key);

    auto weak = candidate("01"); // key (0,0), strongly dominated by (7,5)
    const InsertOutcome outcome = archive.try_insert(weak.genome, weak.key);
    CHECK_FALSE(outcome.accepted);
    CHECK(outcome.removed.empty());
    CHECK(archive.size() == 1);
    CHECK(archive.entries()[0].genome == BitString::parse("11"));
}

TEST_CASE("an equal-key candidate replaces the incumbent without changing the key set") {
    const ProblemParams params(4, 1, 1); // "1100" and "1101" share their LO values
    Archive archive(params);
    const BitString first = BitString::parse("1100");
    const BitString second = BitString::parse("1101");
    REQUIRE(evaluate(first, params) == evaluate(second, params));

    archive.try_insert(first, evaluate(first, params));
    const InsertOutcome outcome = archive.try_insert(second, evaluate(second, params));
    CHECK(outcome.accepted);
    REQUIRE(outcome.removed.size() == 1);
    CHECK(outcome.removed[0] == evaluate(first, params));
    CHECK(archive.size() == 1);
    CHECK(archive.entries()[0].genome == second);
}

TEST_CASE("a dominating candidate evicts the dominated incumbent") {
    const ProblemParams params(4, 1, 1);
    Archive archive(params);
    const BitString low = BitString::parse("1100");  // key (12,12)
    const BitString high = BitString::parse("1110"); // key (19,23), dominates (12,12)
    archive.try_insert(low, evaluate(low, params));

    const InsertOutcome outcome = archive.try_insert(high, evaluate(high, params));
    CHECK(outcome.accepted);
    REQUIRE(outcome.removed.size() == 1);
    CHECK(outcome.removed[0] == evaluate(low, params));
    CHECK(archive.size() == 1);
    CHECK(archive.contains_key(evaluate(high, params)));
    archive.check_invariants();
}

TEST_CASE("covers_front") {
    const ProblemParams params(2, 1, 1);
    std::vector<ObjectiveKey> front;
    for (const FrontPoint& point : pareto_front(params))
        front.push_back(point.key);
    REQUIRE(front.size() == 2);

    Archive archive(params);
    CHECK_FALSE(archive.covers_front(front)); // empty archive, non-empty front

    auto one = candidate("11"); // (7,5): one of the two front keys
    archive.try_insert(one.genome, one.key);
    CHECK_FALSE(archive.covers_front(front)); // (5,7) still missing

    auto other = candidate("10");
    archive.try_insert(other.genome, other.key);
    CHECK(archive.covers_front(front));
}

TEST_CASE("try_insert matches the reference rule on random sequences") {
    const ProblemParams params(12, 3, 2);
    RandomSource rng(112233);
    Archive archive(params);
    for (int t = 0; t < 5000; ++t) {
        const BitString genome = random_bitstring(12, rng);
        const ObjectiveKey key = evaluate(genome, params);
        const RefOutcome expected = reference_insert(key_set(archive), key);
        const InsertOutcome outcome = archive.try_insert(genome, key);

        REQUIRE(outcome.accepted == expected.accepted);
        std::vector<ObjectiveKey> removed = outcome.removed;
        std::vector<ObjectiveKey> expected_removed = expected.removed;
        std::sort(removed.begin(), removed.end());
        std::sort(expected_removed.begin(), expected_removed.end());
        REQUIRE(removed == expected_removed);

        std::vector<ObjectiveKey> keys = key_set(archive);
        std::vector<ObjectiveKey> expected_keys = expected.kept;
        std::sort(expected_keys.begin(), expected_keys.end());
        REQUIRE(keys == expected_keys);

        REQUIRE(archive.size() <= 8); // |P| <= 2^k
    }
    archive.check_invariants();
}

TEST_CASE("inserting a key already present leaves the key set unchanged") {
    const ProblemParams params(12, 2, 3);
    RandomSource rng(9);
    Archive archive(params);
    for (int t = 0; t < 200; ++t) {
        const BitString genome = random_bitstring(12, rng);
        archive.try_insert(genome, evaluate(genome, params));
    }
    const std::vector<ObjectiveKey> before = key_set(archive);
    for (std::size_t i = 0; i < before.size(); ++i) {
        const BitString copy = archive.entries()[i].genome;
        archive.try_insert(copy, before[i]);
        REQUIRE(key_set(archive) == before);
    }
}

TEST_CASE("the closed key set does not depend on insertion order") {
    const ProblemParams params(8, 2, 2);
    RandomSource rng(31415);
    std::vector<Candidate> pool;
    for (int t = 0; t < 64; ++t) {
        BitString genome = random_bitstring(8, rng);
        ObjectiveKey key = evaluate(genome, params);
        pool.push_back(Candidate{std::move(genome), std::move(key)});
    }

    // Inserting the pool twice closes over order effects: the surviving key
    // set must be the pool's non-dominated set, whatever the order.
    std::vector<ObjectiveKey> reference;
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
        Archive archive(params);
        for (int round = 0; round < 2; ++round)
            for (const Candidate& c : pool)
                archive.try_insert(c.genome, c.key);
        archive.check_invariants();
        const std::vector<ObjectiveKey> keys = key_set(archive);
        if (shuffle == 0)
            reference = keys;
        else
            REQUIRE(keys == reference);
        for (std::size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[rng.next_below(i)]);
    }
    CHECK_FALSE(reference.empty());
}
