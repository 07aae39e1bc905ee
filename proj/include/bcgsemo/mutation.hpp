#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bcgsemo/bitstring.hpp"
#include "bcgsemo/random_source.hpp"

namespace bcgsemo {

// Uniform random bitstring of length n. Consumes exactly ceil(n/64) draws;
// bit i comes from bit (i mod 64) of draw floor(i/64).
inline BitString random_bitstring(std::size_t n, RandomSource& rng) {
    if (n == 0)
        throw std::invalid_argument("random_bitstring: n must be positive");
    std::vector<std::uint8_t> bits(n);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t offset = i % 64;
        if (offset == 0)
            word = rng.next_u64();
        bits[i] = static_cast<std::uint8_t>((word >> offset) & 1u);
    }
    return BitString(std::move(bits));
}

// Standard bit mutation: each bit flips independently with probability 1/n,
// decided left to right with one draw per bit (exactly n draws). A zero-flip
// offspring is a legal outcome; the parent is never modified.
inline BitString standard_mutation(const BitString& x, RandomSource& rng) {
    const std::size_t n = x.size();
    std::vector<std::uint8_t> bits(x.bits().begin(), x.bits().end());
    const double p = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.next_unit() < p)
            bits[i] ^= 1u;
    }
    return BitString(std::move(bits));
}

// Block mutation: flips each bit of the chosen block independently with
// probability 1/block_length, left to right within the block (exactly
// block_length draws). Bits outside the block are copied verbatim. For a
// single block covering the whole string this replays standard_mutation
// bit-exactly on the same rng stream.
inline BitString block_mutation(const BitString& x, std::size_t block_index_1based,
                                std::size_t block_length, RandomSource& rng) {
    const std::size_t n = x.size();
    if (block_length == 0 || n % block_length != 0)
        throw std::invalid_argument("block_mutation: n must be a multiple of the block length");
    const std::size_t k = n / block_length;
    if (block_index_1based < 1 || block_index_1based > k)
        throw std::invalid_argument("block_mutation: block index out of range");
    std::vector<std::uint8_t> bits(x.bits().begin(), x.bits().end());
    const double p = 1.0 / static_cast<double>(block_length);
    const std::size_t begin = (block_index_1based - 1) * block_length;
    for (std::size_t i = begin; i < begin + block_length; ++i) {
        if (rng.next_unit() < p)
            bits[i] ^= 1u;
    }
    return BitString(std::move(bits));
}

} // namespace bcgsemo
