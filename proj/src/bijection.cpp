#include "qmap/bijection.hpp"

#include <algorithm>
#include <array>

namespace qmap {

namespace {

struct Arcs {
  std::vector<std::int32_t> twin;
  std::vector<std::int32_t> next;
  std::vector<std::int64_t> origin_label;
};

// Corner t is the angular sector at v_t just before the contour leaves along
// its t-th step. Arc t runs from corner t to its successor, the next corner
// in cyclic contour order with a label one smaller (the extra vertex for 1).
Arcs build_arcs(const EmbeddedTree& labelled, bool keep_flat_edges) {
  const auto size = labelled.edge_count();
  if (size == 0) throw std::domain_error("the bijection needs at least one edge");
  if (labelled.root_label != 1) throw std::domain_error("expected root label 1");
  const auto labels = vertex_labels(labelled);
  if (*std::min_element(labels.begin(), labels.end()) < 1) {
    throw std::domain_error("tree is not well labelled");
  }
  const auto contour = contour_traversal(labelled.tree);
  const auto corners = static_cast<std::int32_t>(2 * size);
  const auto extra = static_cast<std::int32_t>(size + 1);

  std::vector<std::int64_t> label(corners);
  std::int64_t top = 0;
  for (std::int32_t step = 0; step < corners; ++step) {
    label[step] = labels[contour[step]];
    top = std::max(top, label[step]);
  }
  std::vector<std::int32_t> successor(corners, -1);
  std::vector<std::int32_t> last_seen(static_cast<std::size_t>(top) + 1, -1);
  for (std::int32_t step = 2 * corners - 1; step >= 0; --step) {
    const auto count = step % corners;
    if (step < corners && label[count] > 1) {
      successor[count] = last_seen[label[count] - 1];
      if (successor[count] < 0) throw ConsistencyError("corner without successor");
    }
    last_seen[label[count]] = count;
  }

  // In-arcs grouped per target corner, sources in decreasing contour order.
  std::vector<std::int32_t> in_start(corners + 1, 0);
  for (std::int32_t node = 0; node < corners; ++node) {
    if (successor[node] >= 0) ++in_start[successor[node] + 1];
  }
  for (std::int32_t count = 0; count < corners; ++count) in_start[count + 1] += in_start[count];
  std::vector<std::int32_t> in_source(in_start[corners]);
  {
    auto fill = in_start;
    for (std::int32_t node = corners - 1; node >= 0; --node) {
      if (successor[node] >= 0) in_source[fill[successor[node]]++] = node;
    }
  }

  // Flat tree edges (equal labels) get a dart pair after the arcs.
  std::vector<std::int32_t> tree_dart(corners, -1);
  std::int32_t darts = 2 * corners;
  if (keep_flat_edges) {
    std::vector<std::int32_t> flat_id(size + 1, -1);
    for (std::int32_t step = 0; step < corners; ++step) {
      const auto lhs = contour[step];
      const auto rhs = contour[step + 1];
      if (labels[lhs] != labels[rhs]) continue;
      const bool down = labelled.tree.parent(rhs) == lhs;
      const auto child = down ? rhs : lhs;
      if (flat_id[child] < 0) {
        flat_id[child] = darts;
        darts += 2;
      }
      tree_dart[step] = flat_id[child] + (down ? 0 : 1);
    }
  }

  Arcs out;
  out.twin.assign(darts, -1);
  out.next.assign(darts, -1);
  out.origin_label.assign(darts, 0);
  for (std::int32_t node = 0; node < corners; ++node) {
    out.twin[2 * node] = 2 * node + 1;
    out.twin[2 * node + 1] = 2 * node;
    out.origin_label[2 * node] = label[node];
    out.origin_label[2 * node + 1] = label[node] - 1;
  }
  if (keep_flat_edges) {
    for (std::int32_t step = 0; step < corners; ++step) {
      if (tree_dart[step] < 0) continue;
      const auto dart = tree_dart[step];
      out.twin[dart] = dart ^ 1;
      out.origin_label[dart] = label[step];
    }
  }

  // Rotation around tree vertices: corners in contour order; within a corner
  // the arriving arcs, then the leaving arc, then the flat tree edge if any.
  std::vector<std::int32_t> first(extra + 1, -1);
  std::vector<std::int32_t> last(extra + 1, -1);
  auto append = [&](std::int32_t vertex, std::int32_t dart) {
    if (last[vertex] < 0) {
      first[vertex] = dart;
    } else {
      out.next[last[vertex]] = dart;
    }
    last[vertex] = dart;
  };
  for (std::int32_t step = 0; step < corners; ++step) {
    const auto vertex = contour[step];
    for (auto i = in_start[step]; i < in_start[step + 1]; ++i) append(vertex, 2 * in_source[i] + 1);
    append(vertex, 2 * step);
    if (tree_dart[step] >= 0) append(vertex, tree_dart[step]);
  }
  // Around the extra vertex the arcs from label-1 corners come in reverse
  // contour order.
  for (std::int32_t step = corners - 1; step >= 0; --step) {
    if (label[step] == 1) append(extra, 2 * step + 1);
  }
  for (std::int32_t vertex = 0; vertex <= extra; ++vertex) {
    if (last[vertex] >= 0) out.next[last[vertex]] = first[vertex];
  }
  return out;
}

}  // namespace

PlanarMap tree_to_quad(const EmbeddedTree& labelled) {
  auto arcs = build_arcs(labelled, false);
  PlanarMap quad;
  try {
    quad = PlanarMap::build(std::move(arcs.twin), std::move(arcs.next), 1);
  } catch (const MapValidationError& err) {
    throw ConsistencyError(std::string("decoded map is invalid: ") + err.what());
  }
  if (!is_quadrangulation(quad)) throw ConsistencyError("decoded map has a face of degree != 4");
  return quad;
}

PlanarMap intermediate_map(const EmbeddedTree& labelled) {
  auto arcs = build_arcs(labelled, true);
  const auto labels = arcs.origin_label;
  PlanarMap map;
  try {
    map = PlanarMap::build(std::move(arcs.twin), std::move(arcs.next), 1);
  } catch (const MapValidationError& err) {
    throw ConsistencyError(std::string("intermediate map is invalid: ") + err.what());
  }
  for (const auto& curve : faces(map)) {
    std::vector<std::int64_t> level_labels;
    for (auto dart : curve) level_labels.push_back(labels[dart]);
    const auto lo = *std::min_element(level_labels.begin(), level_labels.end());
    std::vector<std::int64_t> rel;
    for (auto value : level_labels) rel.push_back(value - lo);
    // Compare up to rotation with the two allowed patterns.
    bool ok = false;
    for (std::size_t radius = 0; radius < rel.size() && !ok; ++radius) {
      std::vector<std::int64_t> rot(rel.size());
      for (std::size_t i = 0; i < rel.size(); ++i) rot[i] = rel[(i + radius) % rel.size()];
      ok = rot == std::vector<std::int64_t>{0, 1, 1} ||
           rot == std::vector<std::int64_t>{0, 1, 2, 1};
    }
    if (!ok) {
      throw ConsistencyError("intermediate face at dart " + std::to_string(curve.front()) +
                             " has an unexpected label pattern");
    }
  }
  return map;
}

EmbeddedTree quad_to_tree(const PlanarMap& quad) {
  require_quadrangulation(quad);
  const auto dist = bfs_distances(quad);
  const auto darts = static_cast<std::int32_t>(quad.dart_count());
  const auto faces_n = static_cast<std::int32_t>(quad.face_count());
  auto label_of = [&](std::int32_t dart) { return dist[quad.origin(dart)]; };

  // Darts of the extended map: the original darts, then two per confluent face.
  std::vector<std::int32_t> twin(quad.twins());
  std::vector<std::int32_t> next(quad.nexts());
  std::vector<char> selected(darts, 0);
  twin.reserve(darts + 2 * faces_n);
  next.reserve(darts + 2 * faces_n);
  std::vector<char> visited(darts, 0);
  for (std::int32_t d0 = 0; d0 < darts; ++d0) {
    if (visited[d0]) continue;
    std::array<std::int32_t, 4> face{};
    face[0] = d0;
    for (int i = 1; i < 4; ++i) face[i] = quad.face_next(face[i - 1]);
    for (auto dart : face) visited[dart] = 1;
    int top = 0;
    for (int i = 1; i < 4; ++i) {
      if (label_of(face[i]) > label_of(face[top])) top = i;
    }
    const bool confluent = label_of(face[0]) == label_of(face[2]) && label_of(face[1]) == label_of(face[3]);
    if (confluent) {
      // Diagonal between the two corners of maximal label, placed inside
      // the corner between twin(f[a-1]) and f[a].
      const auto slot = static_cast<std::int32_t>(twin.size());
      twin.push_back(slot + 1);
      twin.push_back(slot);
      next.push_back(-1);
      next.push_back(-1);
      for (int level = 0; level < 2; ++level) {
        const int lhs = (top + 2 * level) % 4;
        const auto before = quad.twin(face[(lhs + 3) % 4]);
        const auto dart = slot + level;
        next[before] = dart;
        next[dart] = face[lhs];
      }
      selected.push_back(1);
      selected.push_back(1);
    } else {
      selected[quad.twin(face[(top + 3) % 4])] = 1;
      selected[face[(top + 3) % 4]] = 1;
    }
  }
  const auto total = static_cast<std::int32_t>(twin.size());

  // Restrict the extended rotation to selected darts.
  std::vector<std::int32_t> tree_next(total, -1);
  std::vector<std::int32_t> tree_origin(total, -1);
  for (std::int32_t dart = 0; dart < darts; ++dart) tree_origin[dart] = quad.origin(dart);
  for (std::int32_t vertex = 0; vertex < static_cast<std::int32_t>(quad.vertex_count()); ++vertex) {
    const auto start = quad.vertex_dart(vertex);
    std::int32_t first = -1;
    std::int32_t prev = -1;
    auto dart = start;
    do {
      if (selected[dart]) {
        tree_origin[dart] = vertex;
        if (prev < 0) {
          first = dart;
        } else {
          tree_next[prev] = dart;
        }
        prev = dart;
      }
      dart = next[dart];
    } while (dart != start);
    if (prev >= 0) tree_next[prev] = first;
  }

  // Root: first selected dart counterclockwise from the reverse of the root.
  auto radius = quad.twin(quad.root());
  {
    const auto start = radius;
    while (!selected[radius]) {
      radius = next[radius];
      if (radius == start) throw ConsistencyError("tree root vertex has no selected edge");
    }
  }

  // Contour of the selected tree.
  const auto size = static_cast<std::size_t>(faces_n);
  std::vector<std::int32_t> vertex_id(quad.vertex_count(), -1);
  std::vector<std::int32_t> parent{-1};
  std::vector<std::int8_t> increments;
  parent.reserve(size + 1);
  increments.reserve(size);
  const auto root_vertex = tree_origin[radius];
  vertex_id[root_vertex] = 0;
  std::vector<std::int32_t> path{0};
  auto dart = radius;
  for (std::size_t step = 0; step < 2 * size; ++step) {
    const auto lhs = tree_origin[dart];
    const auto rhs = tree_origin[twin[dart]];
    if (lhs < 0 || rhs < 0) throw ConsistencyError("selected edge with unknown endpoint");
    if (vertex_id[rhs] < 0) {
      const auto id = static_cast<std::int32_t>(parent.size());
      vertex_id[rhs] = id;
      parent.push_back(vertex_id[lhs]);
      increments.push_back(static_cast<std::int8_t>(dist[rhs] - dist[lhs]));
      path.push_back(id);
    } else {
      if (path.size() < 2 || path[path.size() - 2] != vertex_id[rhs]) {
        throw ConsistencyError("selected edges contain a cycle");
      }
      path.pop_back();
    }
    dart = tree_next[twin[dart]];
  }
  if (dart != radius || parent.size() != size + 1 || path.size() != 1) {
    throw ConsistencyError("selected edges do not form a spanning tree of the labelled vertices");
  }
  return EmbeddedTree{PlaneTree::from_parents(std::move(parent)), std::move(increments),
                      dist[root_vertex]};
}

}  // namespace qmap
