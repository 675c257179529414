#pragma once

// Small generators shared by the property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qmap/random.hpp"
#include "qmap/walk.hpp"

namespace testing_support {

/// Uniform walk of B(n,k): n ups and n+k-1 downs in random order, then a down.
inline qmap::LatticeWalk random_member(std::int64_t size, std::int64_t level, qmap::Rng& rng) {
  std::vector<std::int8_t> steps(static_cast<std::size_t>(size), 1);
  steps.resize(static_cast<std::size_t>(2 * size + level - 1), -1);
  std::shuffle(steps.begin(), steps.end(), rng);
  steps.push_back(-1);
  return qmap::LatticeWalk(std::move(steps));
}

/// Arbitrary +-1 or ternary walk, for checks that need no class membership.
inline qmap::LatticeWalk random_walk(std::size_t len, bool ternary, qmap::Rng& rng) {
  std::uniform_int_distribution<int> step(ternary ? -1 : 0, 1);
  std::vector<std::int8_t> steps(len);
  for (auto& start : steps) {
    const int vertex = step(rng);
    start = static_cast<std::int8_t>(ternary ? vertex : 2 * vertex - 1);
  }
  return qmap::LatticeWalk(std::move(steps));
}

/// Every +-1 walk of the given length, in binary counting order.
inline std::vector<qmap::LatticeWalk> all_walks(std::size_t len) {
  std::vector<qmap::LatticeWalk> out;
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    std::vector<std::int8_t> steps(len);
    for (std::size_t j = 0; j < len; ++j) steps[j] = ((bits >> j) & 1u) ? 1 : -1;
    out.emplace_back(std::move(steps));
  }
  return out;
}

inline std::int64_t ups(const qmap::LatticeWalk& walk) { return static_cast<std::int64_t>(walk.count(1)); }

}  // namespace testing_support
