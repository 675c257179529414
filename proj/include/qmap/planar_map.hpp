#pragma once

// Rooted planar maps as rotation systems on darts.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmap {

class MapValidationError : public std::domain_error {
 public:
  enum class Reason { BadSize, NotInvolution, NotPermutation, BadRoot, Disconnected, NotPlanar,
                      NotQuadrangulation };
  MapValidationError(Reason reason, const std::string& what);
  Reason reason;
};

std::string to_string(MapValidationError::Reason reason);

/// twin is the edge involution, next the counterclockwise successor around the
/// origin vertex. Faces are the orbits of next∘twin; each such orbit has its
/// face on the right of every dart in it.
class PlanarMap {
 public:
  /// Validates and counts vertices/faces. Throws MapValidationError.
  static PlanarMap build(std::vector<std::int32_t> twin, std::vector<std::int32_t> next,
                         std::int32_t root);

  std::size_t dart_count() const { return twin_.size(); }
  std::size_t edge_count() const { return twin_.size() / 2; }
  std::size_t vertex_count() const { return vertex_dart_.size(); }
  std::size_t face_count() const { return face_count_; }

  std::int32_t twin(std::int32_t dart) const { return twin_[dart]; }
  std::int32_t next(std::int32_t dart) const { return next_[dart]; }
  std::int32_t face_next(std::int32_t dart) const { return next_[twin_[dart]]; }
  std::int32_t origin(std::int32_t dart) const { return origin_[dart]; }
  std::int32_t root() const { return root_; }
  std::int32_t root_vertex() const { return origin_[root_]; }
  /// Some dart leaving a vertex.
  std::int32_t vertex_dart(std::int32_t vertex) const { return vertex_dart_[vertex]; }

  const std::vector<std::int32_t>& twins() const { return twin_; }
  const std::vector<std::int32_t>& nexts() const { return next_; }

  bool operator==(const PlanarMap& other) const {
    return twin_ == other.twin_ && next_ == other.next_ && root_ == other.root_;
  }

 private:
  std::vector<std::int32_t> twin_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> origin_;
  std::vector<std::int32_t> vertex_dart_;
  std::size_t face_count_ = 0;
  std::int32_t root_ = 0;
};

/// Dart cycles of the face permutation, starting from the smallest dart.
std::vector<std::vector<std::int32_t>> faces(const PlanarMap& map);

bool is_quadrangulation(const PlanarMap& map);
/// Throws MapValidationError(NotQuadrangulation) naming the first bad face.
void require_quadrangulation(const PlanarMap& map);

/// Two-colouring of the vertices; empty when the map is not bipartite.
std::vector<std::int8_t> bipartition(const PlanarMap& map);

/// Graph distance of every vertex from the root vertex.
std::vector<std::int32_t> bfs_distances(const PlanarMap& map);

struct Profile {
  std::vector<std::int64_t> counts;  // [k-1] = vertices at distance k, k = 1..radius

  std::int64_t radius() const { return static_cast<std::int64_t>(counts.size()); }
  std::int64_t at(std::int64_t level) const;
  std::int64_t cumulative(std::int64_t level) const;
};

Profile bfs_profile(const PlanarMap& map);

/// Renumbers darts in breadth-first order from the root so that isomorphic
/// rooted maps get identical arrays.
PlanarMap canonical_form(const PlanarMap& map);

/// "map D ROOT", then one "dart twin next" line per dart, then "end".
std::string to_text(const PlanarMap& map);
PlanarMap parse_map(std::string_view text);

}  // namespace qmap
