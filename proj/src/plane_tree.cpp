#include "qmap/plane_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmap {

PlaneTree::PlaneTree() : parent_{-1}, first_child_{-1}, next_sibling_{-1}, depth_{0} {}

PlaneTree PlaneTree::from_parents(std::vector<std::int32_t> parent) {
  if (parent.empty() || parent[0] != -1) {
    throw std::domain_error("parent array must start with the root (-1)");
  }
  const auto count = static_cast<std::int32_t>(parent.size());
  PlaneTree tree;
  tree.first_child_.assign(count, -1);
  tree.next_sibling_.assign(count, -1);
  tree.depth_.assign(count, 0);
  std::vector<std::int32_t> last_child(count, -1);
  std::vector<std::int32_t> path{0};
  path.reserve(64);
  for (std::int32_t vertex = 1; vertex < count; ++vertex) {
    const auto pos = parent[vertex];
    while (!path.empty() && path.back() != pos) path.pop_back();
    if (path.empty()) {
      throw std::domain_error("parent array is not a preorder numbering at vertex " +
                              std::to_string(vertex));
    }
    path.push_back(vertex);
    tree.depth_[vertex] = static_cast<std::int32_t>(path.size()) - 1;
    if (last_child[pos] < 0) {
      tree.first_child_[pos] = vertex;
    } else {
      tree.next_sibling_[last_child[pos]] = vertex;
    }
    last_child[pos] = vertex;
  }
  tree.parent_ = std::move(parent);
  return tree;
}

std::vector<std::int32_t> PlaneTree::children(std::int32_t vertex) const {
  std::vector<std::int32_t> out;
  for (auto count = first_child_[vertex]; count >= 0; count = next_sibling_[count]) out.push_back(count);
  return out;
}

std::size_t PlaneTree::child_count(std::int32_t vertex) const {
  std::size_t level = 0;
  for (auto count = first_child_[vertex]; count >= 0; count = next_sibling_[count]) ++level;
  return level;
}

LatticeWalk tree_to_dyck(const PlaneTree& tree) {
  // In preorder, going from v-1 to v climbs from depth(v-1) up to depth(v)-1.
  const auto count = static_cast<std::int32_t>(tree.vertex_count());
  std::vector<std::int8_t> steps;
  steps.reserve(2 * tree.edge_count());
  for (std::int32_t vertex = 1; vertex < count; ++vertex) {
    for (auto dart = tree.depth(vertex - 1); dart >= tree.depth(vertex); --dart) steps.push_back(-1);
    steps.push_back(1);
  }
  for (auto dart = tree.depth(count - 1); dart > 0; --dart) steps.push_back(-1);
  return LatticeWalk(std::move(steps));
}

bool is_dyck_path(const LatticeWalk& walk) {
  std::int64_t height = 0;
  for (auto start : walk.steps()) {
    if (start == 0) return false;
    height += start;
    if (height < 0) return false;
  }
  return height == 0;
}

PlaneTree dyck_to_tree(const LatticeWalk& walk) {
  if (!is_dyck_path(walk)) throw std::domain_error("not a Dyck path: " + walk.to_ternary());
  const auto count = walk.size() / 2 + 1;
  PlaneTree tree;
  tree.parent_.assign(count, -1);
  tree.first_child_.assign(count, -1);
  tree.next_sibling_.assign(count, -1);
  tree.depth_.assign(count, 0);
  std::vector<std::int32_t> last_child(count, -1);
  std::vector<std::int32_t> path;
  path.reserve(64);
  path.push_back(0);
  std::int32_t next = 1;
  for (auto start : walk.steps()) {
    if (start > 0) {
      const auto pos = path.back();
      const auto vertex = next++;
      tree.parent_[vertex] = pos;
      tree.depth_[vertex] = tree.depth_[pos] + 1;
      if (last_child[pos] < 0) {
        tree.first_child_[pos] = vertex;
      } else {
        tree.next_sibling_[last_child[pos]] = vertex;
      }
      last_child[pos] = vertex;
      path.push_back(vertex);
    } else {
      path.pop_back();
    }
  }
  return tree;
}

std::vector<std::int32_t> contour_traversal(const PlaneTree& tree) {
  const auto count = static_cast<std::int32_t>(tree.vertex_count());
  std::vector<std::int32_t> seq;
  seq.reserve(2 * tree.edge_count() + 1);
  seq.push_back(0);
  for (std::int32_t vertex = 1; vertex < count; ++vertex) {
    auto node = seq.back();
    while (node != tree.parent(vertex)) {
      node = tree.parent(node);
      seq.push_back(node);
    }
    seq.push_back(vertex);
  }
  for (auto node = seq.back(); node != 0;) {
    node = tree.parent(node);
    seq.push_back(node);
  }
  return seq;
}

LatticeWalk sample_dyck_path(std::size_t size, Rng& rng) {
  std::vector<std::int8_t> word(2 * size + 1, -1);
  std::fill(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(size), 1);
  std::shuffle(word.begin(), word.end(), rng);
  // The unique rotation staying nonnegative before its last step starts right
  // after the first time the global minimum is reached.
  std::int64_t height = 0;
  std::int64_t lowest = 0;
  std::size_t cut = 0;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    height += word[pos];
    if (height < lowest) {
      lowest = height;
      cut = pos + 1;
    }
  }
  std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(cut % word.size()),
              word.end());
  word.pop_back();
  return LatticeWalk(std::move(word));
}

LatticeWalk sample_dyck_prefix(std::size_t size, std::size_t len, Rng& rng) {
  if (len > 2 * size) throw std::domain_error("prefix longer than the path");
  std::vector<std::int8_t> steps(len);
  std::uint64_t height = 0;
  for (std::size_t step = 0; step < len; ++step) {
    // With m steps left at height h, the number of completions is the ballot
    // number N(m,h); an up step keeps N(m-1,h+1) of them, a fraction of
    // (h+2)(m-h) / (2m(h+1)). Compared exactly against a 64-bit uniform.
    const std::uint64_t low = 2 * size - step;
    bool up = true;
    if (height > 0) {
      using u128 = unsigned __int128;
      const u128 num = static_cast<u128>((height + 2) * (low - height)) << 64;
      up = static_cast<u128>(rng()) * (2 * low * (height + 1)) < num;
    }
    steps[step] = up ? 1 : -1;
    height = up ? height + 1 : height - 1;
  }
  return LatticeWalk(std::move(steps));
}

PlaneTree sample_plane_tree(std::size_t size, Rng& rng) {
  return dyck_to_tree(sample_dyck_path(size, rng));
}

std::string to_parentheses(const PlaneTree& tree) {
  const auto walk = tree_to_dyck(tree);
  std::string out;
  out.reserve(walk.size() + 2);
  out.push_back('(');
  for (auto start : walk.steps()) out.push_back(start > 0 ? '(' : ')');
  out.push_back(')');
  return out;
}

PlaneTree parse_parentheses(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::domain_error("tree must be a balanced parenthesis word with a root pair");
  }
  std::vector<std::int8_t> steps;
  steps.reserve(text.size() - 2);
  for (char ch : text.substr(1, text.size() - 2)) {
    if (ch == '(') {
      steps.push_back(1);
    } else if (ch == ')') {
      steps.push_back(-1);
    } else {
      throw std::domain_error(std::string("unexpected character in tree word: ") + ch);
    }
  }
  return dyck_to_tree(LatticeWalk(std::move(steps)));
}

DyckPathEnumerator::DyckPathEnumerator(std::size_t size) : size_(size), current_(2 * size, -1) {
  std::fill(current_.begin(), current_.begin() + static_cast<std::ptrdiff_t>(size), 1);
}

DyckPathEnumerator::DyckPathEnumerator(std::size_t size, const LatticeWalk& start)
    : size_(size), current_(start.steps().begin(), start.steps().end()) {
  if (start.size() != 2 * size || !is_dyck_path(start)) {
    throw std::domain_error("resume point is not a Dyck path of semilength " + std::to_string(size));
  }
}

std::optional<LatticeWalk> DyckPathEnumerator::next() {
  if (done_) return std::nullopt;
  LatticeWalk out{current_};
  // Successor: flip the rightmost U that can become D, then complete with
  // all remaining U's followed by D's.
  std::vector<std::int64_t> height(current_.size() + 1, 0);
  for (std::size_t i = 0; i < current_.size(); ++i) height[i + 1] = height[i] + current_[i];
  bool advanced = false;
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (current_[i] != 1 || height[i] < 1) continue;
    const std::size_t ups_before = (i + static_cast<std::size_t>(height[i])) / 2;
    const std::size_t remaining_up = size_ - ups_before;
    current_[i] = -1;
    std::size_t j = i + 1;
    for (std::size_t radius = 0; radius < remaining_up; ++radius) current_[j++] = 1;
    while (j < current_.size()) current_[j++] = -1;
    advanced = true;
    break;
  }
  if (!advanced) done_ = true;
  return out;
}

std::vector<PlaneTree> all_plane_trees(std::size_t size) {
  std::vector<PlaneTree> out;
  DyckPathEnumerator it(size);
  while (auto walk = it.next()) out.push_back(dyck_to_tree(*walk));
  return out;
}

}  // namespace qmap
