#include "bcgsemo/problem.hpp"

#include <algorithm>
#include <limits>

namespace bcgsemo {

std::string uint128_to_string(uint128 value) {
    if (value == 0)
        return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

namespace {

// (l+1)^(2k) <= 2^126, checked with capped exact multiplication.
bool scalarization_fits(std::uint64_t block_length, std::uint64_t k) {
    const uint128 limit = uint128(1) << 126;
    const uint128 base = uint128(block_length) + 1;
    uint128 acc = 1;
    for (std::uint64_t i = 0; i < 2 * k; ++i) {
        if (acc > limit / base)
            return false;
        acc *= base;
    }
    return acc <= limit;
}

} // namespace

ProblemParams::ProblemParams(std::uint64_t n, std::uint64_t k, std::uint64_t r)
    : n_(n), k_(k), r_(r) {
    if (n == 0 || k == 0)
        throw std::invalid_argument("ProblemParams: n and k must be positive");
    if (n % k != 0)
        throw std::invalid_argument("ProblemParams: k must divide n");
    block_length_ = n / k;
    if (r < 1 || r > block_length_)
        throw std::invalid_argument("ProblemParams: r must satisfy 1 <= r <= n/k");
    // Digits are stored in 64 bits; (l+1)^2 - 1 must fit.
    if (block_length_ >= (std::uint64_t(1) << 32))
        throw std::invalid_argument("ProblemParams: block length must be below 2^32");
    if (!scalarization_fits(block_length_, k_))
        throw std::invalid_argument(
            "ProblemParams: objectives would overflow 128-bit scalarization "
            "(requires 2*k*log2(l+1) <= 126)");
}

std::vector<std::uint8_t> ProblemParams::target_one() const {
    return std::vector<std::uint8_t>(block_length_, 1);
}

std::vector<std::uint8_t> ProblemParams::target_conflict() const {
    std::vector<std::uint8_t> z(block_length_, 1);
    std::fill(z.begin() + static_cast<std::ptrdiff_t>(block_length_ - r_), z.end(), 0);
    return z;
}

const char* to_string(Dominance d) {
    switch (d) {
    case Dominance::FirstStronglyDominates: return "FIRST_STRONGLY_DOMINATES";
    case Dominance::SecondStronglyDominates: return "SECOND_STRONGLY_DOMINATES";
    case Dominance::Equal: return "EQUAL";
    case Dominance::Incomparable: return "INCOMPARABLE";
    }
    return "?";
}

std::size_t leading_match(std::span<const std::uint8_t> block,
                          std::span<const std::uint8_t> target) {
    if (block.size() != target.size())
        throw std::invalid_argument("leading_match: length mismatch");
    std::size_t i = 0;
    while (i < block.size() && block[i] == target[i])
        ++i;
    return i;
}

BaseValuePair base_values(std::span<const std::uint8_t> block, const ProblemParams& params) {
    const std::uint64_t l = params.block_length();
    const std::uint64_t r = params.r();
    if (block.size() != l)
        throw std::invalid_argument("base_values: block length mismatch");

    // z1 and z2 agree (all ones) on the first l-r positions, then z1 stays 1
    // while z2 switches to 0.
    std::uint64_t ones = 0;
    while (ones < l && block[ones] == 1)
        ++ones;

    std::uint64_t lo1, lo2;
    if (ones < l - r) {
        lo1 = ones;
        lo2 = ones;
    } else {
        lo1 = ones;
        std::uint64_t zeros = 0;
        while (l - r + zeros < l && block[l - r + zeros] == 0)
            ++zeros;
        lo2 = l - r + zeros;
    }
    return BaseValuePair{(l + 1) * lo1 + lo2, (l + 1) * lo2 + lo1};
}

ObjectiveKey evaluate(std::span<const std::uint8_t> bits, const ProblemParams& params) {
    if (bits.size() != params.n())
        throw std::invalid_argument("evaluate: bitstring length mismatch");
    const std::uint64_t l = params.block_length();
    ObjectiveKey key;
    key.blocks.reserve(params.k());
    for (std::uint64_t b = 0; b < params.k(); ++b)
        key.blocks.push_back(base_values(bits.subspan(b * l, l), params));
    return key;
}

ObjectiveKey evaluate(const BitString& x, const ProblemParams& params) {
    return evaluate(x.bits(), params);
}

ScalarObjectives scalarize(const ObjectiveKey& key, const ProblemParams& params) {
    if (key.blocks.size() != params.k())
        throw std::invalid_argument("scalarize: key block count mismatch");
    const uint128 weight_step = (uint128(params.block_length()) + 1) *
                                (uint128(params.block_length()) + 1);
    ScalarObjectives out;
    for (const BaseValuePair& digits : key.blocks) {
        out.f1 = out.f1 * weight_step + digits.f1;
        out.f2 = out.f2 * weight_step + digits.f2;
    }
    return out;
}

Dominance compare(const ObjectiveKey& a, const ObjectiveKey& b) {
    if (a.blocks.size() != b.blocks.size())
        throw std::invalid_argument("compare: keys have different block counts");
    int order1 = 0; // sign of f1(a) - f1(b)
    int order2 = 0;
    for (std::size_t i = 0; i < a.blocks.size() && order1 == 0; ++i) {
        if (a.blocks[i].f1 != b.blocks[i].f1)
            order1 = a.blocks[i].f1 > b.blocks[i].f1 ? 1 : -1;
    }
    for (std::size_t i = 0; i < a.blocks.size() && order2 == 0; ++i) {
        if (a.blocks[i].f2 != b.blocks[i].f2)
            order2 = a.blocks[i].f2 > b.blocks[i].f2 ? 1 : -1;
    }
    if (order1 == 0 && order2 == 0)
        return Dominance::Equal;
    if (order1 >= 0 && order2 >= 0)
        return Dominance::FirstStronglyDominates;
    if (order1 <= 0 && order2 <= 0)
        return Dominance::SecondStronglyDominates;
    return Dominance::Incomparable;
}

std::vector<FrontPoint> pareto_front(const ProblemParams& params) {
    const std::uint64_t k = params.k();
    const std::uint64_t l = params.block_length();
    const std::vector<std::uint8_t> z1 = params.target_one();
    const std::vector<std::uint8_t> z2 = params.target_conflict();

    std::vector<FrontPoint> points;
    points.reserve(std::size_t(1) << k);
    for (std::uint64_t profile = 0; profile < (std::uint64_t(1) << k); ++profile) {
        std::vector<std::uint8_t> bits;
        bits.reserve(params.n());
        for (std::uint64_t b = 0; b < k; ++b) {
            const std::vector<std::uint8_t>& target = ((profile >> b) & 1u) ? z2 : z1;
            bits.insert(bits.end(), target.begin(), target.end());
        }
        BitString witness(std::move(bits));
        points.push_back(FrontPoint{evaluate(witness, params), std::move(witness)});
    }

    // Descending f1 order; profiles can only collide on degenerate parameter
    // sets, but deduplicate regardless.
    std::sort(points.begin(), points.end(),
              [](const FrontPoint& a, const FrontPoint& b) { return b.key < a.key; });
    points.erase(std::unique(points.begin(), points.end(),
                             [](const FrontPoint& a, const FrontPoint& b) {
                                 return a.key == b.key;
                             }),
                 points.end());
    return points;
}

} // namespace bcgsemo
