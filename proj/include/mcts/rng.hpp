#pragma once

#include <cstdint>
#include <random>

namespace mcts {

/// Every stochastic choice in the library is driven by a caller-owned engine;
/// nothing reads global random state. Two runs with the same seed, config and
/// a deterministic domain are bit-for-bit identical.
using Rng = std::mt19937_64;

inline std::size_t uniform_index(std::size_t count, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

inline double uniform_unit(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace mcts
