// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "maskbench/qcore.hpp"

namespace maskbench::qcore {

// Haar-uniform pure state: normalized vector of iid complex Gaussians.
PureState haar_pure_state(std::size_t dim, std::mt19937_64& rng);

// Mixed state from the Ginibre ensemble: G G† / Tr(G G†).
DensityMatrix ginibre_mixed_state(std::size_t dim, std::mt19937_64& rng);

// Uniform point in the closed unit ball.
BlochVector random_bloch_in_ball(std::mt19937_64& rng);

// SplitMix64 step; used to derive independent per-task seeds from one base
// seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace maskbench::qcore
