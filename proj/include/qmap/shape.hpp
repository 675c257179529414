#pragma once

// The subtree spanned by the root and a few marked contour times, with its
// unary paths contracted to superedges.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qmap/plane_tree.hpp"

namespace qmap {

struct Shape {
  PlaneTree tree;                          // shape vertices in host preorder
  std::vector<std::int32_t> host_vertex;   // shape vertex -> host vertex
  std::vector<std::int64_t> superedge_lengths;  // [j-1] = length of the edge into shape vertex j
  std::vector<std::int32_t> fixed;         // shape vertex of v_{t_i}, i = 1..p

  std::size_t superedge_count() const { return superedge_lengths.size(); }
  /// Root has one shape child, branchpoints exactly two, fixed vertices are
  /// pairwise distinct leaves other than the root.
  bool is_binary() const;
};

/// Throws std::domain_error unless 0 < t_1 < ... < t_p < 2n and p >= 1.
Shape extract_shape(const PlaneTree& host, std::span<const std::int64_t> times);

struct ShapeMatrix {
  std::vector<std::vector<int>> entries;  // row k, column j
  std::vector<std::string> row_labels;    // "x1", "m1", ... in prefix order

  std::size_t size() const { return entries.size(); }
  bool is_unit_lower_triangular() const;
  std::int64_t determinant() const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> lengths) const;
};

/// Rows follow the non-root shape vertices in prefix order; row k has a one in
/// column j iff superedge j lies on the root path of shape vertex k. Throws
/// std::domain_error for non-binary shapes.
ShapeMatrix shape_matrix(const Shape& start);

}  // namespace qmap
