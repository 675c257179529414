#include "qmap/verify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "qmap/bijection.hpp"
#include "qmap/blossom.hpp"
#include "qmap/enumeration.hpp"
#include "qmap/planar_map.hpp"

namespace qmap {

namespace {

bool profile_equals(const Profile& profile, const LabelDistribution& dist) {
  return dist.min_label == 1 && profile.counts == dist.counts;
}

InstanceCheck check_instance(const EmbeddedTree& labelled, std::string* canonical_text) {
  InstanceCheck out;
  const auto quad = tree_to_quad(labelled);
  out.tree_round_trip = quad_to_tree(quad) == labelled;
  out.profile_matches = profile_equals(bfs_profile(quad), label_distribution(labelled));
  // Decode a relabelled copy so the inverse does not rely on our dart numbering.
  auto canon = canonical_form(quad);
  try {
    out.quad_round_trip = canonical_form(tree_to_quad(quad_to_tree(canon))) == canon;
  } catch (const std::exception&) {
    out.quad_round_trip = false;
  }
  if (canonical_text) *canonical_text = to_text(canon);
  return out;
}

std::uint64_t to_u64(const BigInt& value) { return value.convert_to<std::uint64_t>(); }

}  // namespace

InstanceCheck check_bijection_instance(const EmbeddedTree& labelled) { return check_instance(labelled, nullptr); }

BijectionReport verify_bijection(std::int64_t size) {
  require_enumerable(size);
  BijectionReport report;
  report.size = size;
  report.expected_images = to_u64(exact_counts(size).quadrangulations);
  std::unordered_set<std::string> images;
  WellLabelledEnumerator it(size);
  while (auto nbr = it.next()) {
    ++report.trees;
    std::string canon;
    InstanceCheck check;
    try {
      check = check_instance(*nbr, &canon);
    } catch (const std::exception&) {
      ++report.tree_failures;
      continue;
    }
    if (!check.tree_round_trip) ++report.tree_failures;
    if (!check.quad_round_trip) ++report.quad_failures;
    if (!check.profile_matches) ++report.profile_failures;
    images.insert(std::move(canon));
  }
  report.distinct_images = images.size();
  return report;
}

CountsReport verify_counts(std::int64_t size) {
  require_enumerable(size);
  CountsReport report;
  report.size = size;
  EmbeddedTreeEnumerator it(size);
  while (auto node = it.next()) {
    ++report.embedded;
    if (is_well_labelled(*node)) ++report.well_labelled;
  }
  const auto counts = exact_counts(size);
  report.embedded_matches = BigInt(report.embedded) == counts.embedded;
  report.well_labelled_matches = BigInt(report.well_labelled) == counts.well_labelled;
  report.quadrangulations_match = counts.quadrangulations == counts.well_labelled;
  return report;
}

ConjugationReport verify_conjugation(std::int64_t size) {
  require_enumerable(size);
  ConjugationReport report;
  report.size = size;
  std::vector<BlossomTree> trees;
  std::unordered_map<std::string, std::size_t> index;
  EmbeddedTreeEnumerator it(size);
  while (auto node = it.next()) {
    auto blossom = embedded_to_blossom(*node);
    index.emplace(to_text(blossom), trees.size());
    trees.push_back(std::move(blossom));
  }
  report.blossom_trees = trees.size();
  bool partition_ok = index.size() == trees.size();

  std::vector<std::uint8_t> covered(trees.size(), 0);
  const auto width = static_cast<std::uint64_t>(size + 2);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (covered[i]) continue;
    const auto cls = conjugacy_class(trees[i]);
    ++report.classes;
    report.max_class_size = std::max<std::uint64_t>(report.max_class_size, cls.size());
    if (cls.size() < width) ++report.symmetric_classes;
    std::uint64_t good = 0;
    for (const auto& member : cls) {
      auto found = index.find(to_text(member));
      if (found == index.end() || covered[found->second]) {
        partition_ok = false;
      } else {
        covered[found->second] = 1;
      }
      const bool by_walk = encodes_well_labelled(member);
      if (by_walk != is_well_labelled(blossom_to_embedded(member))) ++report.walk_failures;
      if (by_walk) ++good;
    }
    if (2 * cls.size() != width * good) ++report.identity_failures;
  }
  report.partition_ok =
      partition_ok && std::all_of(covered.begin(), covered.end(), [](auto count) { return count != 0; });
  return report;
}

RotationReport verify_rotation_invariance(std::int64_t size, std::int64_t excess) {
  if (size < 0 || excess < 1) throw std::domain_error("rotation check needs n >= 0 and k >= 1");
  const auto len = static_cast<std::size_t>(2 * size + excess);
  if (len > kCycleLemmaMaxLength) throw std::length_error("rotation check: walk too long");
  RotationReport report;
  report.size = size;
  report.excess = excess;

  // Up positions among the first len-1 steps, as in verify_cycle_lemma.
  std::vector<std::size_t> pos(static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  const std::size_t free = len - 1;
  while (true) {
    std::vector<std::int8_t> steps(len, -1);
    for (auto place : pos) steps[place] = 1;
    const LatticeWalk walk(std::move(steps));
    ++report.walks;
    const auto base = walk_heights(walk, excess);
    for (std::size_t start = 1; start < len; ++start) {
      if (walk[(len - 1 + start) % len] != -1) continue;
      const auto shifted = cyclic_shift(walk, start);
      ++report.rotations;
      const auto other = walk_heights(shifted, excess);
      if (other.dyck_down_counts != base.dyck_down_counts) ++report.dyck_count_failures;
      std::vector<std::size_t> moved;
      for (auto pos : base.low_records) moved.push_back((pos + len - start - 1) % len + 1);
      std::sort(moved.begin(), moved.end());
      if (moved != other.low_records) ++report.record_failures;
    }

    std::size_t i = pos.size();
    while (i > 0 && pos[i - 1] == free - pos.size() + i - 1) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < pos.size(); ++j) pos[j] = pos[j - 1] + 1;
  }
  return report;
}

std::string describe(const BijectionReport& report) {
  std::ostringstream out;
  out << "bijection n=" << report.size << " trees=" << report.trees << " images=" << report.distinct_images << "/"
      << report.expected_images << " tree_failures=" << report.tree_failures
      << " quad_failures=" << report.quad_failures << " profile_failures=" << report.profile_failures;
  return out.str();
}

std::string describe(const CountsReport& report) {
  std::ostringstream out;
  const auto counts = exact_counts(report.size);
  out << "counts n=" << report.size << " embedded=" << report.embedded << "/" << counts.embedded
      << " well_labelled=" << report.well_labelled << "/" << counts.well_labelled
      << " quadrangulations=" << counts.quadrangulations;
  return out.str();
}

std::string describe(const ConjugationReport& report) {
  std::ostringstream out;
  out << "classes n=" << report.size << " blossom_trees=" << report.blossom_trees << " classes=" << report.classes
      << " symmetric=" << report.symmetric_classes << " max_size=" << report.max_class_size
      << " identity_failures=" << report.identity_failures << " walk_failures=" << report.walk_failures
      << " partition=" << (report.partition_ok ? "ok" : "broken");
  return out.str();
}

std::string describe(const RotationReport& report) {
  std::ostringstream out;
  out << "rotations n=" << report.size << " k=" << report.excess << " walks=" << report.walks
      << " rotations=" << report.rotations << " dyck_failures=" << report.dyck_count_failures
      << " record_failures=" << report.record_failures;
  return out.str();
}

}  // namespace qmap
