#pragma once

#include <cstdint>
#include <random>

namespace qmap {

using Rng = std::mt19937_64;

/// Seed for sample `index` of size `n`, independent of how samples are
/// scheduled across workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t size, std::uint64_t index);

}  // namespace qmap
