// Counter-based seeding: every Monte Carlo trial owns an engine derived from
// (seed, grid index, trial index), so totals do not depend on execution
// order or thread count.
#pragma once

#include <cstdint>
#include <random>

namespace arg {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

inline std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t grid_index,
                                    std::uint64_t trial_index) {
    return std::mt19937_64(mix_seed(seed, grid_index, trial_index));
}

}  // namespace arg
