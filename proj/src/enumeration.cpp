#include "qmap/enumeration.hpp"

#include <stdexcept>

namespace qmap {

namespace {

BigInt factorial(std::int64_t size) {
  BigInt value = 1;
  for (std::int64_t i = 2; i <= size; ++i) value *= i;
  return value;
}

BigInt power_of_three(std::int64_t size) {
  BigInt value = 1;
  for (std::int64_t i = 0; i < size; ++i) value *= 3;
  return value;
}

}  // namespace

BigInt catalan(std::int64_t size) {
  if (size < 0) throw std::domain_error("catalan: n must be nonnegative");
  return factorial(2 * size) / (factorial(size) * factorial(size + 1));
}

ExactCounts exact_counts(std::int64_t size) {
  if (size < 0) throw std::domain_error("exact_counts: n must be nonnegative");
  ExactCounts counts;
  counts.catalan = catalan(size);
  counts.embedded = power_of_three(size) * counts.catalan;
  counts.well_labelled = 2 * counts.embedded / (size + 2);
  counts.quadrangulations =
      2 * power_of_three(size) * factorial(2 * size) / (factorial(size) * factorial(size + 2));
  return counts;
}

void require_enumerable(std::int64_t size) {
  if (size < 0) throw std::domain_error("size must be nonnegative");
  if (exact_counts(size).embedded > kEnumerationLimit) {
    throw std::length_error("exhaustive enumeration at n = " + std::to_string(size) +
                            " exceeds the limit of " + std::to_string(kEnumerationLimit) +
                            " trees");
  }
}

EmbeddedTreeEnumerator::EmbeddedTreeEnumerator(std::int64_t size)
    : size_((require_enumerable(size), static_cast<std::size_t>(size))), trees_(size_) {}

EmbeddedTreeEnumerator::EmbeddedTreeEnumerator(std::int64_t size, const EmbeddedTree& start)
    : size_((require_enumerable(size), static_cast<std::size_t>(size))),
      trees_(size_, tree_to_dyck(start.tree)),
      increments_(start.increments) {
  if (start.edge_count() != size_) throw std::domain_error("resume point has the wrong size");
  tree_ = dyck_to_tree(*trees_.next());
}

std::optional<EmbeddedTree> EmbeddedTreeEnumerator::next() {
  if (!tree_) {
    auto walk = trees_.next();
    if (!walk) return std::nullopt;
    tree_ = dyck_to_tree(*walk);
    increments_.assign(size_, -1);
  }
  EmbeddedTree out{*tree_, increments_, 1};
  // Base-three increment with the last edge as the lowest digit.
  std::size_t i = size_;
  while (i > 0 && increments_[i - 1] == 1) increments_[--i] = -1;
  if (i == 0) {
    tree_.reset();
  } else {
    ++increments_[i - 1];
  }
  return out;
}

std::optional<EmbeddedTree> WellLabelledEnumerator::next() {
  while (auto step = inner_.next()) {
    if (is_well_labelled(*step)) return step;
  }
  return std::nullopt;
}

std::vector<EmbeddedTree> all_embedded(std::int64_t size) {
  std::vector<EmbeddedTree> out;
  EmbeddedTreeEnumerator it(size);
  while (auto step = it.next()) out.push_back(std::move(*step));
  return out;
}

std::vector<EmbeddedTree> all_well_labelled(std::int64_t size) {
  std::vector<EmbeddedTree> out;
  WellLabelledEnumerator it(size);
  while (auto step = it.next()) out.push_back(std::move(*step));
  return out;
}

}  // namespace qmap
