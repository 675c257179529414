#pragma once

// Rooted quadrangulations with n faces <-> well-labelled trees with n edges.
// Labels of the tree are distances to the root vertex of the quadrangulation.

#include <stdexcept>

#include "qmap/embedded_tree.hpp"
#include "qmap/planar_map.hpp"

namespace qmap {

/// Raised when an internal invariant of the bijection fails; it indicates a
/// bug or an invalid input that slipped past validation.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requires a well-labelled tree with n >= 1 edges (std::domain_error).
/// Dart 2t leaves the vertex of contour corner t toward its successor; the
/// root dart goes from the extra vertex to the tree root.
PlanarMap tree_to_quad(const EmbeddedTree& labelled);

/// Tree plus the successor arcs, before the edges joining equal labels are
/// removed. Every face is a triangle (e, e+1, e+1) or a quadrangle
/// (e, e+1, e+2, e+1); throws ConsistencyError otherwise.
PlanarMap intermediate_map(const EmbeddedTree& labelled);

/// Requires a quadrangulation with at least one face.
EmbeddedTree quad_to_tree(const PlanarMap& quad);

}  // namespace qmap
