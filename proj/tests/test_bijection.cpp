#include "doctest.h"

#include <set>

#include "qmap/bijection.hpp"
#include "qmap/blossom.hpp"
#include "qmap/enumeration.hpp"
#include "qmap/verify.hpp"

using namespace qmap;

TEST_CASE("round trips over all well-labelled trees") {
  for (int size = 1; size <= 5; ++size) {
    std::set<std::string> images;
    for (const auto& labelled : all_well_labelled(size)) {
      const auto quad = tree_to_quad(labelled);
      intermediate_map(labelled);
      const auto back = quad_to_tree(quad);
      INFO(to_text(labelled) << " -> " << to_text(back));
      CHECK(back == labelled);
      images.insert(to_text(canonical_form(quad)));
    }
    CHECK(images.size() == exact_counts(size).quadrangulations);
  }
}

namespace {

EmbeddedTree tree_of(std::vector<std::int32_t> parents, std::vector<std::int8_t> kappa) {
  return make_embedded(PlaneTree::from_parents(std::move(parents)), std::move(kappa), 1);
}

}  // namespace

TEST_CASE("the two quadrangulations with one face") {
  const auto path = PlanarMap::build({1, 0, 3, 2}, {0, 2, 1, 3}, 0);
  const auto star = PlanarMap::build({1, 0, 3, 2}, {2, 1, 0, 3}, 0);
  const auto climb = tree_of({-1, 0}, {1});
  const auto flat = tree_of({-1, 0}, {0});

  const auto q1 = tree_to_quad(climb);
  CHECK(canonical_form(q1) == canonical_form(path));
  CHECK(bfs_profile(q1).counts == std::vector<std::int64_t>{1, 1});
  const auto q2 = tree_to_quad(flat);
  CHECK(canonical_form(q2) == canonical_form(star));
  CHECK(bfs_profile(q2).counts == std::vector<std::int64_t>{2});

  CHECK(quad_to_tree(path) == climb);
  CHECK(quad_to_tree(star) == flat);
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(tree_to_quad(make_embedded(PlaneTree{}, {}, 1)), std::domain_error);
  CHECK_THROWS_AS(tree_to_quad(tree_of({-1, 0}, {-1})), std::domain_error);
  CHECK_THROWS_AS(tree_to_quad(make_embedded(PlaneTree::from_parents({-1, 0}), {0}, 0)),
                  std::domain_error);
  CHECK_THROWS_AS(quad_to_tree(PlanarMap::build({1, 0}, {0, 1}, 0)), MapValidationError);
}

TEST_CASE("exhaustive reports") {
  for (int size = 1; size <= 5; ++size) {
    const auto report = verify_bijection(size);
    INFO(describe(report));
    CHECK(report.ok());
    CHECK(BigInt(report.trees) == exact_counts(size).well_labelled);
  }
}

TEST_CASE("labels are distances") {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t size = 1 + rng() % (trial < 120 ? 200 : 5000);
    const auto labelled = sample_well_labelled_coupled(size, rng).well_labelled;
    const auto check = check_bijection_instance(labelled);
    CHECK(check.tree_round_trip);
    CHECK(check.quad_round_trip);
    CHECK(check.profile_matches);

    const auto quad = tree_to_quad(labelled);
    const auto label_dist = label_distribution(labelled);
    const auto profile = bfs_profile(quad);
    CHECK(profile.radius() == label_dist.max_label);
    for (std::int64_t level = 1; level <= label_dist.max_label; ++level) CHECK(profile.at(level) == label_dist.count(level));

    // Tree vertices keep their labels as distances; the extra vertex is the root.
    auto dist = bfs_distances(quad);
    std::sort(dist.begin(), dist.end());
    auto labels = vertex_labels(labelled);
    labels.push_back(0);
    std::sort(labels.begin(), labels.end());
    CHECK(std::equal(dist.begin(), dist.end(), labels.begin(), labels.end()));

    if (size <= 200) {
      const auto mid = intermediate_map(labelled);
      // Successor arcs plus the tree edges joining equal labels.
      const auto flat = std::count(labelled.increments.begin(), labelled.increments.end(), 0);
      CHECK(mid.edge_count() == 2 * size + flat);
      CHECK(mid.face_count() + mid.vertex_count() == mid.edge_count() + 2);
      for (const auto& curve : faces(mid)) CHECK((curve.size() == 3 || curve.size() == 4));
    }
  }
}
