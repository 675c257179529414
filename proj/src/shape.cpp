#include "qmap/shape.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmap {

Shape extract_shape(const PlaneTree& host, std::span<const std::int64_t> times) {
  if (times.empty()) throw std::domain_error("extract_shape needs at least one time");
  const auto len = static_cast<std::int64_t>(2 * host.edge_count());
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] <= 0 || times[i] >= len || (i > 0 && times[i] <= times[i - 1])) {
      throw std::domain_error("times must satisfy 0 < t_1 < ... < t_p < 2n");
    }
  }
  const auto contour = contour_traversal(host);
  const auto count = static_cast<std::int32_t>(host.vertex_count());

  std::vector<char> marked(count, 0);
  std::vector<char> is_fixed(count, 0);
  std::vector<std::int32_t> subtree_children(count, 0);
  marked[0] = 1;
  std::vector<std::int32_t> fixed_host;
  for (auto step : times) {
    const auto vertex = contour[step];
    fixed_host.push_back(vertex);
    is_fixed[vertex] = 1;
    for (auto node = vertex; !marked[node]; node = host.parent(node)) {
      marked[node] = 1;
      ++subtree_children[host.parent(node)];
    }
  }

  std::vector<std::int32_t> shape_of(count, -1);
  Shape start;
  for (std::int32_t vertex = 0; vertex < count; ++vertex) {
    if (marked[vertex] && (vertex == 0 || is_fixed[vertex] || subtree_children[vertex] >= 2)) {
      shape_of[vertex] = static_cast<std::int32_t>(start.host_vertex.size());
      start.host_vertex.push_back(vertex);
    }
  }
  std::vector<std::int32_t> parent(start.host_vertex.size(), -1);
  for (std::size_t j = 1; j < start.host_vertex.size(); ++j) {
    const auto vertex = start.host_vertex[j];
    auto node = host.parent(vertex);
    while (shape_of[node] < 0) node = host.parent(node);
    parent[j] = shape_of[node];
    start.superedge_lengths.push_back(host.depth(vertex) - host.depth(node));
  }
  start.tree = PlaneTree::from_parents(std::move(parent));
  for (auto vertex : fixed_host) start.fixed.push_back(shape_of[vertex]);
  return start;
}

bool Shape::is_binary() const {
  const auto count = static_cast<std::int32_t>(tree.vertex_count());
  std::vector<char> is_fixed(count, 0);
  for (auto face : fixed) {
    if (face == 0 || is_fixed[face]) return false;
    is_fixed[face] = 1;
  }
  if (tree.child_count(0) != 1) return false;
  for (std::int32_t vertex = 1; vertex < count; ++vertex) {
    const auto count = tree.child_count(vertex);
    if (is_fixed[vertex] ? count != 0 : count != 2) return false;
  }
  return true;
}

ShapeMatrix shape_matrix(const Shape& start) {
  if (!start.is_binary()) throw std::domain_error("shape matrix is only defined for binary shapes");
  const auto count = static_cast<std::int32_t>(start.tree.vertex_count());
  const auto index_q = static_cast<std::size_t>(count - 1);
  ShapeMatrix matrix;
  matrix.entries.assign(index_q, std::vector<int>(index_q, 0));
  for (std::int32_t level = 1; level < count; ++level) {
    for (auto node = level; node > 0; node = start.tree.parent(node)) matrix.entries[level - 1][node - 1] = 1;
  }

  // Fixed vertices take their index; a branchpoint is m_i when it separates
  // the fixed vertices i and i+1, i.e. it is their deepest common ancestor.
  std::vector<std::string> label(count);
  for (std::size_t i = 0; i < start.fixed.size(); ++i) label[start.fixed[i]] = "x" + std::to_string(i + 1);
  for (std::size_t i = 0; i + 1 < start.fixed.size(); ++i) {
    auto lhs = start.fixed[i];
    auto rhs = start.fixed[i + 1];
    while (lhs != rhs) {
      if (lhs > rhs) {
        lhs = start.tree.parent(lhs);
      } else {
        rhs = start.tree.parent(rhs);
      }
    }
    label[lhs] = "m" + std::to_string(i + 1);
  }
  for (std::int32_t level = 1; level < count; ++level) matrix.row_labels.push_back(label[level]);
  return matrix;
}

bool ShapeMatrix::is_unit_lower_triangular() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j == i && entries[i][j] != 1) return false;
      if (j > i && entries[i][j] != 0) return false;
    }
  }
  return true;
}

std::int64_t ShapeMatrix::determinant() const {
  // Fraction-free Gaussian elimination (Bareiss); entries stay integral.
  auto lhs = entries;
  const auto queue_ = lhs.size();
  std::vector<std::vector<std::int64_t>> rhs(queue_, std::vector<std::int64_t>(queue_));
  for (std::size_t i = 0; i < queue_; ++i) {
    for (std::size_t j = 0; j < queue_; ++j) rhs[i][j] = lhs[i][j];
  }
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t level = 0; level < queue_; ++level) {
    if (rhs[level][level] == 0) {
      std::size_t radius = level + 1;
      while (radius < queue_ && rhs[radius][level] == 0) ++radius;
      if (radius == queue_) return 0;
      std::swap(rhs[level], rhs[radius]);
      sign = -sign;
    }
    for (std::size_t i = level + 1; i < queue_; ++i) {
      for (std::size_t j = level + 1; j < queue_; ++j) {
        rhs[i][j] = (rhs[i][j] * rhs[level][level] - rhs[i][level] * rhs[level][j]) / prev;
      }
    }
    prev = rhs[level][level];
  }
  return queue_ == 0 ? 1 : sign * rhs[queue_ - 1][queue_ - 1];
}

std::vector<std::int64_t> ShapeMatrix::apply(std::span<const std::int64_t> lengths) const {
  if (lengths.size() != entries.size()) throw std::domain_error("dimension mismatch");
  std::vector<std::int64_t> out(entries.size(), 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < lengths.size(); ++j) out[i] += entries[i][j] * lengths[j];
  }
  return out;
}

}  // namespace qmap
