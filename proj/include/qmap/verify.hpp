#pragma once

// Exhaustive checks of the bijections and counting identities for small
// sizes. Each report counts failures instead of stopping at the first one.

#include <cstdint>
#include <string>

#include "qmap/embedded_tree.hpp"

namespace qmap {

struct InstanceCheck {
  bool tree_round_trip = false;  // quad_to_tree(tree_to_quad(w)) == w
  bool quad_round_trip = false;  // tree_to_quad(quad_to_tree(q)) == q up to dart names
  bool profile_matches = false;  // BFS profile of q == label distribution of w
  bool ok() const { return tree_round_trip && quad_round_trip && profile_matches; }
};

/// Runs all three checks on one well-labelled tree.
InstanceCheck check_bijection_instance(const EmbeddedTree& labelled);

struct BijectionReport {
  std::int64_t size = 0;
  std::uint64_t trees = 0;
  std::uint64_t distinct_images = 0;
  std::uint64_t expected_images = 0;  // |Q_n|
  std::uint64_t tree_failures = 0;
  std::uint64_t quad_failures = 0;
  std::uint64_t profile_failures = 0;
  bool ok() const {
    return tree_failures == 0 && quad_failures == 0 && profile_failures == 0 &&
           distinct_images == expected_images;
  }
};

BijectionReport verify_bijection(std::int64_t size);

struct CountsReport {
  std::int64_t size = 0;
  std::uint64_t embedded = 0;
  std::uint64_t well_labelled = 0;
  bool embedded_matches = false;
  bool well_labelled_matches = false;
  bool quadrangulations_match = false;  // closed forms for |Q_n| and |W_n| agree
  bool ok() const { return embedded_matches && well_labelled_matches && quadrangulations_match; }
};

CountsReport verify_counts(std::int64_t size);

struct ConjugationReport {
  std::int64_t size = 0;
  std::uint64_t blossom_trees = 0;
  std::uint64_t classes = 0;
  std::uint64_t max_class_size = 0;
  std::uint64_t symmetric_classes = 0;  // fewer than n+2 members
  std::uint64_t identity_failures = 0;  // 2|C| != (n+2)|C cap W|
  std::uint64_t walk_failures = 0;      // walk criterion disagrees with is_well_labelled
  bool partition_ok = false;            // every blossom tree in exactly one class
  bool ok() const {
    return identity_failures == 0 && walk_failures == 0 && partition_ok &&
           max_class_size <= static_cast<std::uint64_t>(size + 2);
  }
};

/// Groups all blossom trees with n inner nodes into rerooting classes.
ConjugationReport verify_conjugation(std::int64_t size);

struct RotationReport {
  std::int64_t size = 0;
  std::int64_t excess = 0;
  std::uint64_t walks = 0;
  std::uint64_t rotations = 0;
  std::uint64_t dyck_count_failures = 0;  // l-hat differs between conjugates
  std::uint64_t record_failures = 0;      // low records not carried by the shift
  bool ok() const { return dyck_count_failures == 0 && record_failures == 0; }
};

/// Every walk of B(n,k) against each of its rotations ending in a down step.
RotationReport verify_rotation_invariance(std::int64_t size, std::int64_t excess);

/// One line per report, for the CLI and the acceptance runner.
std::string describe(const BijectionReport& report);
std::string describe(const CountsReport& report);
std::string describe(const ConjugationReport& report);
std::string describe(const RotationReport& report);

}  // namespace qmap
