#include "qmap/embedded_tree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qmap {

EmbeddedTree make_embedded(PlaneTree tree, std::vector<std::int8_t> increments,
                           std::int64_t root_label) {
  if (increments.size() != tree.edge_count()) {
    throw std::domain_error("expected one increment per edge");
  }
  for (auto level : increments) {
    if (level < -1 || level > 1) throw std::domain_error("increments must lie in {-1,0,+1}");
  }
  return EmbeddedTree{std::move(tree), std::move(increments), root_label};
}

std::vector<std::int64_t> vertex_labels(const EmbeddedTree& labelled) {
  const auto count = labelled.tree.vertex_count();
  std::vector<std::int64_t> labels(count);
  labels[0] = labelled.root_label;
  for (std::size_t vertex = 1; vertex < count; ++vertex) {
    labels[vertex] = labels[labelled.tree.parent(static_cast<std::int32_t>(vertex))] + labelled.increments[vertex - 1];
  }
  return labels;
}

EmbeddedTree with_root_label(EmbeddedTree labelled, std::int64_t root_label) {
  labelled.root_label = root_label;
  return labelled;
}

bool is_well_labelled(const EmbeddedTree& labelled) {
  if (labelled.root_label != 1) throw std::domain_error("well-labelled trees have root label 1");
  const auto labels = vertex_labels(labelled);
  return *std::min_element(labels.begin(), labels.end()) >= 1;
}

std::int64_t LabelDistribution::count(std::int64_t label) const {
  if (label < min_label || label > max_label) return 0;
  return counts[label - min_label];
}

std::int64_t LabelDistribution::cumulative(std::int64_t level) const {
  std::int64_t sum = 0;
  const auto top = std::min<std::int64_t>(level, static_cast<std::int64_t>(counts.size()));
  for (std::int64_t i = 0; i < top; ++i) sum += counts[i];
  return sum;
}

std::int64_t LabelDistribution::total() const {
  std::int64_t sum = 0;
  for (auto count : counts) sum += count;
  return sum;
}

LabelDistribution label_distribution(const std::vector<std::int64_t>& labels) {
  LabelDistribution dist;
  const auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  dist.min_label = *lo;
  dist.max_label = *hi;
  dist.counts.assign(static_cast<std::size_t>(dist.max_label - dist.min_label + 1), 0);
  for (auto label : labels) ++dist.counts[label - dist.min_label];
  return dist;
}

LabelDistribution label_distribution(const EmbeddedTree& labelled) {
  return label_distribution(vertex_labels(labelled));
}

EmbeddedTree sample_embedded(std::size_t size, Rng& rng, std::int64_t root_label) {
  auto tree = sample_plane_tree(size, rng);
  std::vector<std::int8_t> increments(size);
  std::uniform_int_distribution<int> step(-1, 1);
  for (auto& level : increments) level = static_cast<std::int8_t>(step(rng));
  return EmbeddedTree{std::move(tree), std::move(increments), root_label};
}

ContourConsistencyError::ContourConsistencyError(std::int64_t first, std::int64_t later)
    : std::domain_error("contour pair is inconsistent: times " + std::to_string(first) + " and " +
                        std::to_string(later) + " visit the same vertex with different labels"),
      first_visit(first),
      later_visit(later) {}

ContourPair to_contour_pair(const EmbeddedTree& labelled) {
  const auto labels = vertex_labels(labelled);
  const auto contour = contour_traversal(labelled.tree);
  std::vector<std::int8_t> values(contour.size() - 1);
  for (std::size_t i = 0; i + 1 < contour.size(); ++i) {
    values[i] = static_cast<std::int8_t>(labels[contour[i + 1]] - labels[contour[i]]);
  }
  return ContourPair{tree_to_dyck(labelled.tree), LatticeWalk(std::move(values))};
}

EmbeddedTree from_contour_pair(const ContourPair& pair, std::int64_t root_label) {
  if (!is_dyck_path(pair.height)) throw std::domain_error("height walk is not a Dyck path");
  if (pair.label.size() != pair.height.size()) {
    throw std::domain_error("height and label walks differ in length");
  }
  if (pair.label.final_height() != 0) throw std::domain_error("label walk does not return to 0");

  auto tree = dyck_to_tree(pair.height);
  std::vector<std::int8_t> increments(tree.edge_count());
  std::vector<std::int64_t> label(tree.vertex_count(), 0);
  std::vector<std::int64_t> first_visit(tree.vertex_count(), 0);
  std::vector<std::int32_t> path{0};
  std::int32_t next_vertex = 1;
  std::int64_t value = 0;
  for (std::size_t step = 0; step < pair.height.size(); ++step) {
    value += pair.label[step];
    const auto time = static_cast<std::int64_t>(step + 1);
    if (pair.height[step] > 0) {
      const auto vertex = next_vertex++;
      path.push_back(vertex);
      increments[vertex - 1] = pair.label[step];
      label[vertex] = value;
      first_visit[vertex] = time;
    } else {
      path.pop_back();
      if (label[path.back()] != value) throw ContourConsistencyError(first_visit[path.back()], time);
    }
  }
  return EmbeddedTree{std::move(tree), std::move(increments), root_label};
}

double height_scale(std::size_t size) { return std::sqrt(2.0 * static_cast<double>(size)); }

namespace {
constexpr double kLabelVarianceFactor = 8.0 / 9.0;
}

double label_scale(std::size_t size) {
  return std::pow(kLabelVarianceFactor * static_cast<double>(size), 0.25);
}

double label_scale_constant() { return std::pow(kLabelVarianceFactor, 0.25); }

ScaledPaths::ScaledPaths(const ContourPair& pair)
    : size_(pair.height.size() / 2), e_(partial_sums(pair.height)), v_(partial_sums(pair.label)) {
  if (size_ == 0) throw std::domain_error("scaled paths need n >= 1");
}

std::size_t ScaledPaths::index(double scale) const {
  if (scale < 0.0 || scale > 1.0) throw std::domain_error("scaled time must lie in [0,1]");
  const auto i = static_cast<std::size_t>(std::floor(2.0 * static_cast<double>(size_) * scale));
  return std::min(i, 2 * size_);
}

double ScaledPaths::height(double scale) const {
  return static_cast<double>(e_[index(scale)]) / height_scale(size_);
}

double ScaledPaths::label(double scale) const {
  return static_cast<double>(v_[index(scale)]) / label_scale(size_);
}

double ScaledPaths::sup_label() const {
  return static_cast<double>(*std::max_element(v_.begin(), v_.end())) / label_scale(size_);
}

double ScaledPaths::inf_label() const {
  return static_cast<double>(*std::min_element(v_.begin(), v_.end())) / label_scale(size_);
}

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> words;
  for (std::string nbr; in >> nbr;) words.push_back(nbr);
  return words;
}

std::string walk_token(const LatticeWalk& walk, bool ternary) {
  if (walk.empty()) return ".";
  return ternary ? walk.to_ternary() : walk.to_updown();
}

}  // namespace

std::string to_text(const EmbeddedTree& labelled) {
  std::string out = to_parentheses(labelled.tree) + " " +
                    walk_token(LatticeWalk(labelled.increments), true);
  if (labelled.root_label != 1) out += " " + std::to_string(labelled.root_label);
  return out;
}

EmbeddedTree parse_embedded(std::string_view text) {
  const auto words = split_words(text);
  if (words.size() < 2 || words.size() > 3) {
    throw std::domain_error("embedded tree line must be '<parentheses> <increments> [root]'");
  }
  auto tree = parse_parentheses(words[0]);
  const auto kappa = LatticeWalk::parse(words[1]);
  const std::int64_t root = words.size() == 3 ? std::stoll(words[2]) : 1;
  return make_embedded(std::move(tree), {kappa.steps().begin(), kappa.steps().end()}, root);
}

std::string to_text(const ContourPair& pair) {
  return walk_token(pair.height, false) + " " + walk_token(pair.label, true);
}

ContourPair parse_contour_pair(std::string_view text) {
  const auto words = split_words(text);
  if (words.size() != 2) throw std::domain_error("contour pair line must be '<E> <V>'");
  return ContourPair{LatticeWalk::parse(words[0]), LatticeWalk::parse(words[1])};
}

}  // namespace qmap
