#include "doctest.h"

#include <cmath>
#include <map>
#include <set>

#include "qmap/embedded_tree.hpp"
#include "qmap/enumeration.hpp"
#include "qmap/statistics.hpp"

using namespace qmap;

namespace {

EmbeddedTree tree_of(std::vector<std::int32_t> parents, std::vector<std::int8_t> kappa,
                     std::int64_t root = 1) {
  return make_embedded(PlaneTree::from_parents(std::move(parents)), std::move(kappa), root);
}

// Labels by walking up to the root from every vertex.
std::vector<std::int64_t> labels_by_climbing(const EmbeddedTree& labelled) {
  std::vector<std::int64_t> out(labelled.tree.vertex_count());
  for (std::int32_t vertex = 0; vertex < static_cast<std::int32_t>(out.size()); ++vertex) {
    std::int64_t sum = labelled.root_label;
    for (auto node = vertex; node != 0; node = labelled.tree.parent(node)) sum += labelled.increments[node - 1];
    out[vertex] = sum;
  }
  return out;
}

// The consistency condition checked directly: every visit to a vertex of the
// tree coded by E sees the same value of V, and V starts and ends at 0.
bool consistent(const ContourPair& pair) {
  if (pair.height.size() != pair.label.size() || !is_dyck_path(pair.height)) return false;
  const auto visits = contour_traversal(dyck_to_tree(pair.height));
  const auto values = partial_sums(pair.label);
  if (values.back() != 0) return false;
  std::map<std::int32_t, std::int64_t> seen;
  for (std::size_t step = 0; step < visits.size(); ++step) {
    auto [it, fresh] = seen.emplace(visits[step], values[step]);
    if (!fresh && it->second != values[step]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("vertex labels") {
  CHECK(vertex_labels(make_embedded(PlaneTree{}, {}, 0)) == std::vector<std::int64_t>{0});
  CHECK(vertex_labels(tree_of({-1, 0}, {1})) == std::vector<std::int64_t>{1, 2});
  CHECK(vertex_labels(tree_of({-1, 0, 1}, {1, -1})) == std::vector<std::int64_t>{1, 2, 1});
  CHECK_THROWS_AS(tree_of({-1, 0}, {2}), std::domain_error);
  CHECK_THROWS_AS(tree_of({-1, 0}, {}), std::domain_error);

  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto labelled = sample_embedded(rng() % 80, rng, static_cast<std::int64_t>(rng() % 5) - 2);
    CHECK(vertex_labels(labelled) == labels_by_climbing(labelled));
    const auto shifted = with_root_label(labelled, 1);
    const auto lhs = vertex_labels(labelled), rhs = vertex_labels(shifted);
    for (std::size_t vertex = 0; vertex < lhs.size(); ++vertex) CHECK(rhs[vertex] - lhs[vertex] == 1 - labelled.root_label);
  }
}

TEST_CASE("label distributions") {
  const auto one = label_distribution(make_embedded(PlaneTree{}, {}, 1));
  CHECK(one.min_label == 1);
  CHECK(one.max_label == 1);
  CHECK(one.count(1) == 1);

  std::multiset<std::int64_t> maxima;
  for (const auto& labelled : all_well_labelled(2)) maxima.insert(label_distribution(labelled).max_label);
  // By hand: only the two all-zero labellings stay at 1, and only the path
  // climbing twice reaches 3.
  CHECK(maxima == std::multiset<std::int64_t>{1, 1, 2, 2, 2, 2, 2, 2, 3});

  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = rng() % 100;
    const auto labelled = sample_embedded(size, rng);
    const auto labels = labels_by_climbing(labelled);
    const auto dist = label_distribution(labelled);
    CHECK(dist.total() == static_cast<std::int64_t>(size) + 1);
    CHECK(dist.min_label == *std::min_element(labels.begin(), labels.end()));
    CHECK(dist.max_label == *std::max_element(labels.begin(), labels.end()));
    CHECK(dist.min_label <= labelled.root_label);
    CHECK(labelled.root_label <= dist.max_label);
    for (std::int64_t level = 0; level <= dist.span() + 2; ++level) {
      const auto below = std::count_if(labels.begin(), labels.end(),
                                       [&](auto label) { return label <= dist.min_label + level - 1; });
      CHECK(dist.cumulative(level) == below);
    }
    for (std::int64_t label = dist.min_label - 1; label <= dist.max_label + 1; ++label) {
      CHECK(dist.count(label) == std::count(labels.begin(), labels.end(), label));
    }
  }
}

TEST_CASE("well-labelled trees") {
  CHECK_FALSE(is_well_labelled(tree_of({-1, 0}, {-1})));
  CHECK(is_well_labelled(tree_of({-1, 0}, {0})));
  CHECK_THROWS_AS(is_well_labelled(tree_of({-1, 0}, {0}, 0)), std::domain_error);
  const auto all = all_embedded(2);
  const auto good = std::count_if(all.begin(), all.end(), [](const auto& step) { return is_well_labelled(step); });
  CHECK(all.size() == 18);
  CHECK(good == 9);
  CHECK(good * 4 == static_cast<long>(all.size()) * 2);
}

TEST_CASE("contour pairs by hand") {
  const auto edge = to_contour_pair(tree_of({-1, 0}, {1}));
  CHECK(partial_sums(edge.height) == std::vector<std::int64_t>{0, 1, 0});
  CHECK(partial_sums(edge.label) == std::vector<std::int64_t>{0, 1, 0});
  const auto cherry = to_contour_pair(tree_of({-1, 0, 0}, {1, -1}));
  CHECK(partial_sums(cherry.label) == std::vector<std::int64_t>{0, 1, 0, -1, 0});
  CHECK(to_text(cherry) == "UDUD +--+");
  CHECK(parse_contour_pair("UDUD +--+") == cherry);
}

TEST_CASE("contour pairs are a bijection on small sizes") {
  for (std::int64_t size = 0; size <= 5; ++size) {
    std::set<std::string> images;
    for (const auto& embedded : all_embedded(size)) {
      const auto pair = to_contour_pair(embedded);
      CHECK(consistent(pair));
      if (size <= 3) CHECK(from_contour_pair(pair) == embedded);
      images.insert(to_text(pair));
    }
    CHECK(BigInt(images.size()) == exact_counts(size).embedded);
  }
}

TEST_CASE("corrupted contour pairs are rejected") {
  Rng rng(31);
  int rejected = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t size = 1 + rng() % 12;
    const auto pair = to_contour_pair(sample_embedded(size, rng));
    // Swap two label increments: the bridge still ends at 0 but visits may clash.
    std::vector<std::int8_t> values(pair.label.steps().begin(), pair.label.steps().end());
    std::swap(values[rng() % values.size()], values[rng() % values.size()]);
    const ContourPair bad{pair.height, LatticeWalk(values)};
    if (consistent(bad)) {
      CHECK(to_contour_pair(from_contour_pair(bad)) == bad);
    } else {
      ++rejected;
      CHECK_THROWS_AS(from_contour_pair(bad), ContourConsistencyError);
    }
  }
  CHECK(rejected > 100);
  CHECK_THROWS_AS(from_contour_pair({LatticeWalk::parse("UD"), LatticeWalk::parse("+")}),
                  std::domain_error);
  CHECK_THROWS_AS(from_contour_pair({LatticeWalk::parse("UD"), LatticeWalk::parse("++")}),
                  std::domain_error);
  CHECK_THROWS_AS(from_contour_pair({LatticeWalk::parse("DU"), LatticeWalk::parse("00")}),
                  std::domain_error);
}

TEST_CASE("uniform embedded trees") {
  Rng rng(5);
  CHECK(sample_embedded(0, rng).edge_count() == 0);
  std::map<std::string, double> freq;
  for (const auto& embedded : all_embedded(2)) freq[to_text(embedded)] = 0;
  const int draws = 1'000'000;
  for (int i = 0; i < draws; ++i) freq.at(to_text(sample_embedded(2, rng))) += 1;
  std::vector<double> obs, exp;
  for (const auto& [text, count] : freq) {
    obs.push_back(count);
    exp.push_back(draws / 18.0);
    CHECK(within_sigma(static_cast<std::uint64_t>(count), draws, 1.0 / 18));
  }
  CHECK(chi_square_test(obs, exp).p_value > 1e-3);
}

TEST_CASE("scaled paths") {
  const ScaledPaths edge(to_contour_pair(tree_of({-1, 0}, {1})));
  CHECK(edge.height(0.0) == 0.0);
  CHECK(edge.sup_label() == doctest::Approx(std::pow(9.0 / 8.0, 0.25)));
  CHECK(edge.height(0.5) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(label_scale_constant() == doctest::Approx(std::pow(8.0 / 9.0, 0.25)));

  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t size = 1 + rng() % 500;
    const auto labelled = sample_embedded(size, rng, 0);
    const auto dist = label_distribution(labelled);
    const ScaledPaths paths(to_contour_pair(labelled));
    CHECK(paths.size() == size);
    CHECK(paths.sup_label() == doctest::Approx(dist.max_label / label_scale(size)));
    CHECK(paths.inf_label() == doctest::Approx(dist.min_label / label_scale(size)));
    CHECK(paths.height(0.0) == 0.0);
    CHECK(paths.height(1.0) == 0.0);
    CHECK(label_scale(size) == doctest::Approx(std::pow(8.0 * size / 9.0, 0.25)));
    CHECK(height_scale(size) == doctest::Approx(std::sqrt(2.0 * size)));
    for (double pos_x = 0; pos_x < 1; pos_x += 0.01) CHECK(paths.height(pos_x) >= 0);
  }
}

TEST_CASE("text form") {
  const auto labelled = tree_of({-1, 0, 1, 0}, {1, -1, 0});
  CHECK(to_text(labelled) == "((())()) +-0");
  CHECK(parse_embedded(to_text(labelled)) == labelled);
  const auto zero = with_root_label(labelled, 0);
  CHECK(to_text(zero) == "((())()) +-0 0");
  CHECK(parse_embedded(to_text(zero)) == zero);
  CHECK(to_text(make_embedded(PlaneTree{}, {}, 1)) == "() .");
  CHECK_THROWS(parse_embedded("(()) ++"));
  CHECK_THROWS(parse_embedded("(()"));
}
