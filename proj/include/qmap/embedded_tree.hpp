#pragma once

// Plane trees with integer labels that change by at most one along each edge,
// their label distributions and their contour pairs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmap/plane_tree.hpp"
#include "qmap/random.hpp"
#include "qmap/walk.hpp"

namespace qmap {

struct EmbeddedTree {
  PlaneTree tree;
  std::vector<std::int8_t> increments;  // [v-1] = label change on the edge into v
  std::int64_t root_label = 1;

  std::size_t edge_count() const { return tree.edge_count(); }
  bool operator==(const EmbeddedTree&) const = default;
};

/// Validates sizes and increment range.
EmbeddedTree make_embedded(PlaneTree tree, std::vector<std::int8_t> increments,
                           std::int64_t root_label = 1);

std::vector<std::int64_t> vertex_labels(const EmbeddedTree& labelled);

/// Same tree, every label shifted so the root carries `root_label`.
EmbeddedTree with_root_label(EmbeddedTree labelled, std::int64_t root_label);

/// Requires root_label == 1 (std::domain_error otherwise).
bool is_well_labelled(const EmbeddedTree& labelled);

struct LabelDistribution {
  std::int64_t min_label = 0;
  std::int64_t max_label = 0;
  std::vector<std::int64_t> counts;  // [k - min_label] = vertices with label k

  std::int64_t count(std::int64_t label) const;
  /// Vertices among the k lowest label values, i.e. label <= min_label + k - 1.
  /// For well-labelled trees this is the number of labels <= k.
  std::int64_t cumulative(std::int64_t level) const;
  std::int64_t total() const;
  /// Label span M - m; for well-labelled trees the max label is the span + 1.
  std::int64_t span() const { return max_label - min_label; }
};

LabelDistribution label_distribution(const EmbeddedTree& labelled);
LabelDistribution label_distribution(const std::vector<std::int64_t>& labels);

/// Uniform plane tree with iid uniform increments.
EmbeddedTree sample_embedded(std::size_t size, Rng& rng, std::int64_t root_label = 1);

struct ContourPair {
  LatticeWalk height;  // E, a Dyck path
  LatticeWalk label;   // V, increments in {-1,0,+1}, label minus root label

  bool operator==(const ContourPair&) const = default;
};

/// Thrown by from_contour_pair when two visits of one vertex disagree.
class ContourConsistencyError : public std::domain_error {
 public:
  ContourConsistencyError(std::int64_t first_visit, std::int64_t later_visit);
  std::int64_t first_visit;
  std::int64_t later_visit;
};

ContourPair to_contour_pair(const EmbeddedTree& labelled);
EmbeddedTree from_contour_pair(const ContourPair& pair, std::int64_t root_label = 1);

/// sqrt(2n), the height normalization.
double height_scale(std::size_t size);
/// (8n/9)^{1/4}, the label normalization.
double label_scale(std::size_t size);
/// (8/9)^{1/4}, the label normalization without its n^{1/4}.
double label_scale_constant();

/// Right-continuous step functions s -> E(floor(2ns)) / sqrt(2n) and
/// s -> V(floor(2ns)) / (8n/9)^{1/4} on [0,1].
class ScaledPaths {
 public:
  ScaledPaths(const ContourPair& pair);

  std::size_t size() const { return size_; }
  double height(double scale) const;
  double label(double scale) const;
  double sup_label() const;
  double inf_label() const;

 private:
  std::size_t index(double scale) const;

  std::size_t size_;
  std::vector<std::int64_t> e_;
  std::vector<std::int64_t> v_;
};

std::string to_text(const EmbeddedTree& labelled);
EmbeddedTree parse_embedded(std::string_view text);
std::string to_text(const ContourPair& pair);
ContourPair parse_contour_pair(std::string_view text);

}  // namespace qmap
