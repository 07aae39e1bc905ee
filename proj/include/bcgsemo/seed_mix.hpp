#pragma once

#include <cstdint>

namespace bcgsemo {

// splitmix64 finalizer (Steele, Lea, Flood; public domain reference constants).
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Folds one field into a running hash. Sequentially folding all fields of a
// tuple gives a stable, collision-resistant seed for that tuple.
constexpr std::uint64_t mix_seed(std::uint64_t h, std::uint64_t field) {
    return splitmix64(h ^ (field + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

} // namespace bcgsemo
