#include "qmap/planar_map.hpp"

#include <algorithm>
#include <sstream>

namespace qmap {

MapValidationError::MapValidationError(Reason reason, const std::string& what)
    : std::domain_error(to_string(reason) + ": " + what), reason(reason) {}

std::string to_string(MapValidationError::Reason reason) {
  switch (reason) {
    case MapValidationError::Reason::BadSize: return "bad size";
    case MapValidationError::Reason::NotInvolution: return "twin is not a fixed-point-free involution";
    case MapValidationError::Reason::NotPermutation: return "next is not a permutation";
    case MapValidationError::Reason::BadRoot: return "bad root";
    case MapValidationError::Reason::Disconnected: return "map is disconnected";
    case MapValidationError::Reason::NotPlanar: return "map is not planar";
    case MapValidationError::Reason::NotQuadrangulation: return "not a quadrangulation";
  }
  return "invalid map";
}

namespace {

using Reason = MapValidationError::Reason;

std::size_t count_orbits(const std::vector<std::int32_t>& perm, std::vector<std::int32_t>* id,
                         std::vector<std::int32_t>* rep) {
  std::vector<std::int32_t> local;
  if (!id) id = &local;
  id->assign(perm.size(), -1);
  std::size_t orbits = 0;
  for (std::size_t dart = 0; dart < perm.size(); ++dart) {
    if ((*id)[dart] >= 0) continue;
    auto cur = static_cast<std::int32_t>(dart);
    do {
      (*id)[cur] = static_cast<std::int32_t>(orbits);
      cur = perm[cur];
    } while ((*id)[cur] < 0);
    if (rep) rep->push_back(static_cast<std::int32_t>(dart));
    ++orbits;
  }
  return orbits;
}

}  // namespace

PlanarMap PlanarMap::build(std::vector<std::int32_t> twin, std::vector<std::int32_t> next,
                           std::int32_t root) {
  const auto size = twin.size();
  if (size == 0 || size % 2 != 0 || next.size() != size || size > INT32_MAX) {
    throw MapValidationError(Reason::BadSize, "need an even, positive number of darts");
  }
  const auto total = static_cast<std::int32_t>(size);
  for (std::int32_t dart = 0; dart < total; ++dart) {
    const auto step = twin[dart];
    if (step < 0 || step >= total || step == dart || twin[step] != dart) {
      throw MapValidationError(Reason::NotInvolution, "at dart " + std::to_string(dart));
    }
  }
  std::vector<char> hit(size, 0);
  for (std::int32_t dart = 0; dart < total; ++dart) {
    const auto start = next[dart];
    if (start < 0 || start >= total || hit[start]) {
      throw MapValidationError(Reason::NotPermutation, "at dart " + std::to_string(dart));
    }
    hit[start] = 1;
  }
  if (root < 0 || root >= total) throw MapValidationError(Reason::BadRoot, std::to_string(root));

  PlanarMap map;
  const auto vertices = count_orbits(next, &map.origin_, &map.vertex_dart_);
  std::vector<std::int32_t> face_perm(size);
  for (std::int32_t dart = 0; dart < total; ++dart) face_perm[dart] = next[twin[dart]];
  map.face_count_ = count_orbits(face_perm, nullptr, nullptr);

  // Connectivity over vertices through edges.
  std::vector<char> seen(vertices, 0);
  std::vector<std::int32_t> queue{map.origin_[0]};
  seen[map.origin_[0]] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto dart = map.vertex_dart_[queue[head]];
    const auto start = dart;
    do {
      const auto nbr = map.origin_[twin[dart]];
      if (!seen[nbr]) {
        seen[nbr] = 1;
        queue.push_back(nbr);
      }
      dart = next[dart];
    } while (dart != start);
  }
  if (queue.size() != vertices) {
    throw MapValidationError(Reason::Disconnected, std::to_string(queue.size()) + " of " +
                                                       std::to_string(vertices) + " reachable");
  }
  const auto euler = static_cast<std::int64_t>(vertices) - static_cast<std::int64_t>(size / 2) +
                     static_cast<std::int64_t>(map.face_count_);
  if (euler != 2) {
    throw MapValidationError(Reason::NotPlanar, "genus " + std::to_string((2 - euler) / 2));
  }
  map.twin_ = std::move(twin);
  map.next_ = std::move(next);
  map.root_ = root;
  return map;
}

std::vector<std::vector<std::int32_t>> faces(const PlanarMap& map) {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<char> seen(map.dart_count(), 0);
  for (std::size_t d0 = 0; d0 < map.dart_count(); ++d0) {
    if (seen[d0]) continue;
    std::vector<std::int32_t> face;
    for (auto dart = static_cast<std::int32_t>(d0); !seen[dart]; dart = map.face_next(dart)) {
      seen[dart] = 1;
      face.push_back(dart);
    }
    out.push_back(std::move(face));
  }
  return out;
}

bool is_quadrangulation(const PlanarMap& map) {
  for (std::size_t dart = 0; dart < map.dart_count(); ++dart) {
    auto cur = static_cast<std::int32_t>(dart);
    for (int i = 0; i < 4; ++i) cur = map.face_next(cur);
    if (cur != static_cast<std::int32_t>(dart) || map.face_next(map.face_next(cur)) == cur) return false;
  }
  return true;
}

void require_quadrangulation(const PlanarMap& map) {
  for (const auto& curve : faces(map)) {
    if (curve.size() != 4) {
      throw MapValidationError(Reason::NotQuadrangulation,
                               "face of dart " + std::to_string(curve.front()) + " has degree " +
                                   std::to_string(curve.size()));
    }
  }
}

std::vector<std::int8_t> bipartition(const PlanarMap& map) {
  std::vector<std::int8_t> colour(map.vertex_count(), -1);
  std::vector<std::int32_t> queue{map.root_vertex()};
  colour[map.root_vertex()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto vertex = queue[head];
    auto dart = map.vertex_dart(vertex);
    const auto start = dart;
    do {
      const auto nbr = map.origin(map.twin(dart));
      if (colour[nbr] < 0) {
        colour[nbr] = static_cast<std::int8_t>(1 - colour[vertex]);
        queue.push_back(nbr);
      } else if (colour[nbr] == colour[vertex]) {
        return {};
      }
      dart = map.next(dart);
    } while (dart != start);
  }
  return colour;
}

std::vector<std::int32_t> bfs_distances(const PlanarMap& map) {
  std::vector<std::int32_t> dist(map.vertex_count(), -1);
  std::vector<std::int32_t> queue;
  queue.reserve(map.vertex_count());
  queue.push_back(map.root_vertex());
  dist[map.root_vertex()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto vertex = queue[head];
    auto dart = map.vertex_dart(vertex);
    const auto start = dart;
    do {
      const auto nbr = map.origin(map.twin(dart));
      if (dist[nbr] < 0) {
        dist[nbr] = dist[vertex] + 1;
        queue.push_back(nbr);
      }
      dart = map.next(dart);
    } while (dart != start);
  }
  return dist;
}

std::int64_t Profile::at(std::int64_t level) const {
  if (level < 1 || level > radius()) return 0;
  return counts[level - 1];
}

std::int64_t Profile::cumulative(std::int64_t level) const {
  std::int64_t sum = 0;
  for (std::int64_t i = 1; i <= std::min(level, radius()); ++i) sum += counts[i - 1];
  return sum;
}

Profile bfs_profile(const PlanarMap& map) {
  const auto dist = bfs_distances(map);
  Profile profile;
  const auto radius = *std::max_element(dist.begin(), dist.end());
  profile.counts.assign(static_cast<std::size_t>(radius), 0);
  for (auto level : dist) {
    if (level > 0) ++profile.counts[level - 1];
  }
  return profile;
}

PlanarMap canonical_form(const PlanarMap& map) {
  const auto size = map.dart_count();
  std::vector<std::int32_t> id(size, -1);
  std::vector<std::int32_t> order;
  order.reserve(size);
  id[map.root()] = 0;
  order.push_back(map.root());
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto dart = order[head];
    for (auto stop : {map.twin(dart), map.next(dart)}) {
      if (id[stop] < 0) {
        id[stop] = static_cast<std::int32_t>(order.size());
        order.push_back(stop);
      }
    }
  }
  std::vector<std::int32_t> twin(size), next(size);
  for (std::size_t i = 0; i < size; ++i) {
    twin[i] = id[map.twin(order[i])];
    next[i] = id[map.next(order[i])];
  }
  return PlanarMap::build(std::move(twin), std::move(next), 0);
}

std::string to_text(const PlanarMap& map) {
  std::ostringstream out;
  out << "map " << map.dart_count() << ' ' << map.root() << '\n';
  for (std::size_t dart = 0; dart < map.dart_count(); ++dart) {
    const auto cur = static_cast<std::int32_t>(dart);
    out << dart << ' ' << map.twin(cur) << ' ' << map.next(cur) << '\n';
  }
  out << "end\n";
  return out.str();
}

PlanarMap parse_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  std::int64_t size = 0;
  std::int64_t root = 0;
  if (!(in >> word) || word != "map" || !(in >> size >> root) || size <= 0 || size > INT32_MAX) {
    throw MapValidationError(Reason::BadSize, "expected 'map <darts> <root>' header");
  }
  std::vector<std::int32_t> twin(static_cast<std::size_t>(size), -1);
  std::vector<std::int32_t> next(static_cast<std::size_t>(size), -1);
  for (std::int64_t i = 0; i < size; ++i) {
    std::int64_t dart, step, start;
    if (!(in >> dart >> step >> start) || dart != i) {
      throw MapValidationError(Reason::BadSize, "expected dart line " + std::to_string(i));
    }
    twin[i] = static_cast<std::int32_t>(step);
    next[i] = static_cast<std::int32_t>(start);
  }
  if (!(in >> word) || word != "end") throw MapValidationError(Reason::BadSize, "missing 'end'");
  return PlanarMap::build(std::move(twin), std::move(next), static_cast<std::int32_t>(root));
}

}  // namespace qmap
