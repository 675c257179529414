#pragma once

// Rooted plane trees stored in preorder, with their Dyck path and contour.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmap/random.hpp"
#include "qmap/walk.hpp"

namespace qmap {

/// Vertices are numbered in preorder (root = 0). Children of a vertex are the
/// vertices whose parent it is, in increasing id order.
class PlaneTree {
 public:
  /// The single-vertex tree.
  PlaneTree();

  /// Builds from a preorder parent array (parent[0] = -1). Throws
  /// std::domain_error if the array is not a valid preorder numbering.
  static PlaneTree from_parents(std::vector<std::int32_t> parent);

  std::size_t vertex_count() const { return parent_.size(); }
  std::size_t edge_count() const { return parent_.size() - 1; }

  std::int32_t parent(std::int32_t vertex) const { return parent_[vertex]; }
  std::int32_t first_child(std::int32_t vertex) const { return first_child_[vertex]; }
  std::int32_t next_sibling(std::int32_t vertex) const { return next_sibling_[vertex]; }
  std::int32_t depth(std::int32_t vertex) const { return depth_[vertex]; }
  std::vector<std::int32_t> children(std::int32_t vertex) const;
  std::size_t child_count(std::int32_t vertex) const;

  const std::vector<std::int32_t>& parents() const { return parent_; }
  const std::vector<std::int32_t>& depths() const { return depth_; }

  bool operator==(const PlaneTree& other) const { return parent_ == other.parent_; }

 private:
  friend PlaneTree dyck_to_tree(const LatticeWalk& walk);

  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> first_child_;
  std::vector<std::int32_t> next_sibling_;
  std::vector<std::int32_t> depth_;
};

/// Height of the contour at each time: U when going down into a child.
LatticeWalk tree_to_dyck(const PlaneTree& tree);

/// Throws std::domain_error unless e is a Dyck path.
PlaneTree dyck_to_tree(const LatticeWalk& walk);

bool is_dyck_path(const LatticeWalk& walk);

/// Vertices v_0..v_{2n} visited by the contour traversal.
std::vector<std::int32_t> contour_traversal(const PlaneTree& tree);

/// Uniform plane tree with n edges in O(n).
PlaneTree sample_plane_tree(std::size_t size, Rng& rng);

/// Uniform Dyck path of length 2n (cycle lemma on n U and n+1 D).
LatticeWalk sample_dyck_path(std::size_t size, Rng& rng);

/// The first `len` steps of a uniform Dyck path of semilength n, drawn step by
/// step with the exact conditional probabilities (O(len) time).
LatticeWalk sample_dyck_prefix(std::size_t size, std::size_t len, Rng& rng);

/// Balanced parentheses including the root pair: "()" is the single vertex.
std::string to_parentheses(const PlaneTree& tree);
PlaneTree parse_parentheses(std::string_view text);

/// Dyck paths of semilength n in lexicographic order with U < D. Can be
/// resumed from any Dyck path of the right length.
class DyckPathEnumerator {
 public:
  explicit DyckPathEnumerator(std::size_t size);
  DyckPathEnumerator(std::size_t size, const LatticeWalk& start);

  /// The current path, then advances; empty optional once exhausted.
  std::optional<LatticeWalk> next();

 private:
  std::size_t size_;
  std::vector<std::int8_t> current_;
  bool done_ = false;
};

std::vector<PlaneTree> all_plane_trees(std::size_t size);

}  // namespace qmap
