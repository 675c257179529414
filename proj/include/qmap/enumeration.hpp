#pragma once

// Closed-form counts and exhaustive generators for small sizes.

#include <cstdint>
#include <optional>

#include "qmap/embedded_tree.hpp"
#include "qmap/plane_tree.hpp"
#include "qmap/walk.hpp"

namespace qmap {

BigInt catalan(std::int64_t size);

struct ExactCounts {
  BigInt quadrangulations;  // 2 * 3^n * (2n)! / (n! (n+2)!)
  BigInt well_labelled;     // 2/(n+2) * embedded
  BigInt embedded;          // 3^n * Catalan(n)
  BigInt catalan;
};

ExactCounts exact_counts(std::int64_t size);

/// Enumerators refuse sizes with more than this many embedded trees.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/// Throws std::length_error when 3^n * Catalan(n) exceeds kEnumerationLimit.
void require_enumerable(std::int64_t size);

/// All embedded trees with n edges and root label 1: plane trees in
/// lexicographic Dyck order, and for each tree the increments counted in
/// base three (-1 < 0 < +1, last edge fastest).
class EmbeddedTreeEnumerator {
 public:
  explicit EmbeddedTreeEnumerator(std::int64_t size);
  /// Resumes so that the first call to next() returns `start`.
  EmbeddedTreeEnumerator(std::int64_t size, const EmbeddedTree& start);

  std::optional<EmbeddedTree> next();

 private:
  std::size_t size_;
  DyckPathEnumerator trees_;
  std::optional<PlaneTree> tree_;
  std::vector<std::int8_t> increments_;
};

/// The well-labelled members of EmbeddedTreeEnumerator's sequence.
class WellLabelledEnumerator {
 public:
  explicit WellLabelledEnumerator(std::int64_t size) : inner_(size) {}
  WellLabelledEnumerator(std::int64_t size, const EmbeddedTree& start) : inner_(size, start) {}

  std::optional<EmbeddedTree> next();

 private:
  EmbeddedTreeEnumerator inner_;
};

std::vector<EmbeddedTree> all_embedded(std::int64_t size);
std::vector<EmbeddedTree> all_well_labelled(std::int64_t size);

}  // namespace qmap
