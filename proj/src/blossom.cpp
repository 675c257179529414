#include "qmap/blossom.hpp"

#include <algorithm>
#include <set>

namespace qmap {

namespace {

constexpr std::array<std::int32_t, 3> kNoChildren{-1, -1, -1};

std::int32_t add_node(BlossomTree& blossom, BlossomKind kind, std::int32_t parent, int slot) {
  const auto id = static_cast<std::int32_t>(blossom.kind.size());
  blossom.kind.push_back(kind);
  blossom.parent.push_back(parent);
  blossom.child.push_back(kNoChildren);
  if (parent >= 0) blossom.child[parent][slot] = id;
  return id;
}


}  // namespace

std::size_t BlossomTree::inner_count() const {
  return static_cast<std::size_t>(std::count(kind.begin(), kind.end(), BlossomKind::Inner));
}

void validate_blossom(const BlossomTree& blossom) {
  const auto count = static_cast<std::int32_t>(blossom.kind.size());
  if (count < 2 || blossom.parent.size() != blossom.kind.size() || blossom.child.size() != blossom.kind.size()) {
    throw BlossomValidationError("blossom tree needs a root flag and at least one more node");
  }
  if (blossom.kind[0] != BlossomKind::Flag || blossom.parent[0] != -1 || blossom.child[0][0] != 1 ||
      blossom.child[0][1] != -1 || blossom.child[0][2] != -1) {
    throw BlossomValidationError("node 0 must be the root flag with node 1 as its only child");
  }
  if (blossom.kind[1] == BlossomKind::Arrow) {
    throw BlossomValidationError("the root flag cannot hold an arrow");
  }
  // Preorder check: a DFS in slot order must meet the nodes as 0, 1, 2, ...
  std::vector<std::int32_t> stack{1};
  std::int32_t expected = 1;
  while (!stack.empty()) {
    const auto vertex = stack.back();
    stack.pop_back();
    if (vertex != expected++) throw BlossomValidationError("nodes are not numbered in preorder");
    if (vertex <= 0 || vertex >= count) throw BlossomValidationError("node index out of range");
    if (blossom.kind[vertex] == BlossomKind::Inner) {
      int arrows = 0;
      for (int start = 2; start >= 0; --start) {
        const auto tally = blossom.child[vertex][start];
        if (tally <= vertex || tally >= count || blossom.parent[tally] != vertex) {
          throw BlossomValidationError("inner node " + std::to_string(vertex) + " has a bad child");
        }
        if (blossom.kind[tally] == BlossomKind::Arrow) ++arrows;
        stack.push_back(tally);
      }
      if (arrows != 1) {
        throw BlossomValidationError("inner node " + std::to_string(vertex) +
                                     " must carry exactly one arrow");
      }
    } else if (blossom.child[vertex] != kNoChildren) {
      throw BlossomValidationError("leaf " + std::to_string(vertex) + " has children");
    }
  }
  if (expected != count) throw BlossomValidationError("blossom tree is not connected");
}

std::vector<std::int32_t> leaf_order(const BlossomTree& blossom) {
  // Preorder numbering makes the leaves appear in increasing id order.
  std::vector<std::int32_t> leaves;
  leaves.reserve(blossom.kind.size());
  for (std::size_t vertex = 1; vertex < blossom.kind.size(); ++vertex) {
    if (blossom.kind[vertex] != BlossomKind::Inner) leaves.push_back(static_cast<std::int32_t>(vertex));
  }
  leaves.push_back(0);
  return leaves;
}

FlagLabelling labelling_process(const BlossomTree& blossom) {
  validate_blossom(blossom);
  FlagLabelling out;
  std::vector<std::int8_t> steps;
  std::int64_t current = 2;
  for (auto vertex : leaf_order(blossom)) {
    if (blossom.kind[vertex] == BlossomKind::Arrow) {
      ++current;
      steps.push_back(1);
    } else {
      --current;
      steps.push_back(-1);
      if (vertex != 0) out.labels.push_back(current);
    }
  }
  out.walk = LatticeWalk(std::move(steps));
  return out;
}

namespace {

// Builds the blossom tree of u; when `walk` is given it also records the
// labelling walk (leaves are created in labelling order).
BlossomTree build_blossom(const EmbeddedTree& embedded, std::vector<std::int8_t>* walk) {
  const auto& tree = embedded.tree;
  const std::size_t size = 3 * tree.edge_count() + 2;
  BlossomTree blossom;
  blossom.kind.resize(size);
  blossom.parent.resize(size);
  blossom.child.resize(size);
  if (walk) {
    walk->clear();
    walk->reserve(2 * tree.edge_count() + 2);
  }
  blossom.kind[0] = BlossomKind::Flag;
  blossom.parent[0] = -1;
  blossom.child[0] = kNoChildren;
  std::int32_t next_id = 1;

  // A pending subtree is either an arrow or the blossom of `vertex`
  // restricted to its children from `next` on (a flag once they run out).
  struct Pending {
    std::int32_t parent;
    std::int32_t vertex;  // -1 for an arrow
    std::int32_t next;
    std::int32_t slot;
  };
  std::vector<Pending> stack;
  stack.reserve(64);
  stack.push_back({0, 0, tree.first_child(0), 0});
  while (!stack.empty()) {
    const auto pos = stack.back();
    stack.pop_back();
    const auto id = next_id++;
    blossom.parent[id] = pos.parent;
    blossom.child[id] = kNoChildren;
    blossom.child[pos.parent][pos.slot] = id;
    if (pos.vertex < 0) {
      blossom.kind[id] = BlossomKind::Arrow;
      if (walk) walk->push_back(1);
      continue;
    }
    if (pos.next < 0) {
      blossom.kind[id] = BlossomKind::Flag;
      if (walk) walk->push_back(-1);
      continue;
    }
    blossom.kind[id] = BlossomKind::Inner;
    const Pending arrow{id, -1, -1, 0};
    const Pending sub{id, pos.next, tree.first_child(pos.next), 0};
    const Pending rest{id, pos.vertex, tree.next_sibling(pos.next), 0};
    // Pushed last slot first so that slot 0 is built next.
    switch (embedded.increments[pos.next - 1]) {
      case 1:
        stack.push_back({rest.parent, rest.vertex, rest.next, 2});
        stack.push_back({sub.parent, sub.vertex, sub.next, 1});
        stack.push_back({arrow.parent, arrow.vertex, arrow.next, 0});
        break;
      case 0:
        stack.push_back({rest.parent, rest.vertex, rest.next, 2});
        stack.push_back({arrow.parent, arrow.vertex, arrow.next, 1});
        stack.push_back({sub.parent, sub.vertex, sub.next, 0});
        break;
      default:
        stack.push_back({arrow.parent, arrow.vertex, arrow.next, 2});
        stack.push_back({sub.parent, sub.vertex, sub.next, 1});
        stack.push_back({rest.parent, rest.vertex, rest.next, 0});
        break;
    }
  }
  if (walk) walk->push_back(-1);  // the root flag closes the walk
  return blossom;
}

// Decodes b as if flag `root` were its root flag. Around an inner node the
// cyclic order of neighbours is parent, c0, c1, c2; entering from one
// neighbour, the next three in that order play the roles of slots 0, 1, 2.
EmbeddedTree decode_rooted_at(const BlossomTree& blossom, std::int32_t root) {
  const auto size = (blossom.kind.size() - 2) / 3;
  std::vector<std::int8_t> dyck;
  std::vector<std::int8_t> increments;
  dyck.reserve(2 * size + 1);
  increments.reserve(size);
  std::vector<std::pair<std::int32_t, std::int32_t>> stack;  // (node, entered from)
  stack.reserve(64);
  if (root == 0) {
    stack.emplace_back(blossom.child[0][0], 0);
  } else {
    stack.emplace_back(blossom.parent[root], root);
  }
  while (!stack.empty()) {
    const auto [node, from] = stack.back();
    stack.pop_back();
    if (blossom.kind[node] != BlossomKind::Inner) {
      dyck.push_back(-1);  // a flag closes the current vertex
      continue;
    }
    const auto& count = blossom.child[node];
    const std::array<std::int32_t, 4> around{blossom.parent[node], count[0], count[1], count[2]};
    int at = 0;
    while (around[at] != from) ++at;
    const std::array<std::int32_t, 3> slot{around[(at + 1) & 3], around[(at + 2) & 3],
                                           around[(at + 3) & 3]};
    int lhs = 0;
    while (blossom.kind[slot[lhs]] != BlossomKind::Arrow) ++lhs;
    const std::int8_t kappa = lhs == 0 ? 1 : (lhs == 1 ? 0 : -1);
    const int sub_slot = lhs == 1 ? 0 : 1;
    const int rest_slot = lhs == 2 ? 0 : 2;
    dyck.push_back(1);
    increments.push_back(kappa);
    stack.emplace_back(slot[rest_slot], node);
    stack.emplace_back(slot[sub_slot], node);
  }
  dyck.pop_back();  // the last flag closes the root itself
  return EmbeddedTree{dyck_to_tree(LatticeWalk(std::move(dyck))), std::move(increments), 1};
}

}  // namespace

BlossomTree embedded_to_blossom(const EmbeddedTree& embedded) {
  if (embedded.root_label != 1) throw std::domain_error("blossom encoding expects root label 1");
  return build_blossom(embedded, nullptr);
}

EmbeddedTree blossom_to_embedded(const BlossomTree& blossom) {
  validate_blossom(blossom);
  return decode_rooted_at(blossom, 0);
}

BlossomTree reroot(const BlossomTree& blossom, std::size_t leaf_index) {
  const auto leaves = leaf_order(blossom);
  if (leaf_index >= leaves.size()) throw std::domain_error("leaf index out of range");
  const auto face = leaves[leaf_index];
  if (blossom.kind[face] != BlossomKind::Flag) throw std::domain_error("only a flag can become the root");
  if (face == 0) return blossom;

  BlossomTree out;
  out.kind.reserve(blossom.kind.size());
  out.parent.reserve(blossom.kind.size());
  out.child.reserve(blossom.kind.size());
  add_node(out, BlossomKind::Flag, -1, 0);

  // Around an inner node the cyclic order of neighbours is parent, c0, c1, c2;
  // entering from one neighbour, the children are the next three cyclically.
  struct Visit {
    std::int32_t node;
    std::int32_t from;
    std::int32_t new_parent;
    int slot;
  };
  std::vector<Visit> stack{{blossom.parent[face], face, 0, 0}};
  while (!stack.empty()) {
    const auto vertex = stack.back();
    stack.pop_back();
    const auto id = add_node(out, blossom.kind[vertex.node], vertex.new_parent, vertex.slot);
    if (blossom.kind[vertex.node] != BlossomKind::Inner) continue;
    const std::array<std::int32_t, 4> around{blossom.parent[vertex.node], blossom.child[vertex.node][0],
                                             blossom.child[vertex.node][1], blossom.child[vertex.node][2]};
    int at = 0;
    while (around[at] != vertex.from) ++at;
    for (int start = 2; start >= 0; --start) {
      const auto next = around[(at + 1 + start) % 4];
      stack.push_back({next, vertex.node, id, start});
    }
  }
  // The old root flag is reached from node 1 and becomes an ordinary flag.
  return out;
}

std::vector<BlossomTree> conjugacy_class(const BlossomTree& blossom) {
  std::vector<BlossomTree> out{blossom};
  std::set<std::string> seen{to_text(blossom)};
  const auto leaves = leaf_order(blossom);
  for (std::size_t j = 0; j + 1 < leaves.size(); ++j) {
    if (blossom.kind[leaves[j]] != BlossomKind::Flag) continue;
    auto rerooted = reroot(blossom, j);
    if (seen.insert(to_text(rerooted)).second) out.push_back(std::move(rerooted));
  }
  return out;
}

bool encodes_well_labelled(const BlossomTree& blossom) {
  return is_positive_member(labelling_process(blossom).walk, 2);
}

EmbeddedTree conjugate_well_labelled(const EmbeddedTree& embedded, int choice) {
  if (choice != 0 && choice != 1) throw std::domain_error("choice must be 0 or 1");
  if (embedded.root_label != 1) throw std::domain_error("blossom encoding expects root label 1");
  std::vector<std::int8_t> steps;
  const auto blossom = build_blossom(embedded, &steps);
  const LatticeWalk walk(std::move(steps));
  const auto pos = low_records(walk, 2)[static_cast<std::size_t>(choice)];
  // Starting the walk right after a low record makes it positive. Leaves
  // have increasing ids in labelling order, the root flag being last.
  if (pos == walk.size()) return decode_rooted_at(blossom, 0);
  std::size_t seen = 0;
  for (std::size_t vertex = 1; vertex < blossom.kind.size(); ++vertex) {
    if (blossom.kind[vertex] == BlossomKind::Inner) continue;
    if (seen++ == pos - 1) return decode_rooted_at(blossom, static_cast<std::int32_t>(vertex));
  }
  throw std::logic_error("low record does not match a leaf");
}

CoupledPair sample_well_labelled_coupled(std::size_t size, Rng& rng) {
  if (size < 1) throw std::domain_error("coupled sampler needs n >= 1");
  auto embedded = sample_embedded(size, rng, 1);
  const int choice = static_cast<int>(std::uniform_int_distribution<int>(0, 1)(rng));
  auto labelled = conjugate_well_labelled(embedded, choice);
  return CoupledPair{std::move(labelled), std::move(embedded)};
}

std::string to_text(const BlossomTree& blossom) {
  std::string out = "S";
  out.reserve(blossom.kind.size() + 2 * blossom.inner_count() + 1);
  // Closing parentheses are emitted when a node's last slot is finished.
  std::vector<std::pair<std::int32_t, int>> stack{{blossom.child[0][0], 0}};
  while (!stack.empty()) {
    const auto [node, closers] = stack.back();
    stack.pop_back();
    switch (blossom.kind[node]) {
      case BlossomKind::Arrow: out.push_back('A'); break;
      case BlossomKind::Flag: out.push_back('F'); break;
      case BlossomKind::Inner:
        out.push_back('(');
        stack.emplace_back(blossom.child[node][2], closers + 1);
        stack.emplace_back(blossom.child[node][1], 0);
        stack.emplace_back(blossom.child[node][0], 0);
        continue;
    }
    out.append(static_cast<std::size_t>(closers), ')');
  }
  return out;
}

BlossomTree parse_blossom(std::string_view text) {
  if (text.empty() || text[0] != 'S') throw BlossomValidationError("blossom word must start with S");
  BlossomTree blossom;
  add_node(blossom, BlossomKind::Flag, -1, 0);
  // (node, next free slot) of the open inner nodes
  std::vector<std::pair<std::int32_t, int>> open{{0, 0}};
  for (std::size_t i = 1; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ')') {
      if (open.size() < 2 || open.back().second != 3) {
        throw BlossomValidationError("inner node closed without three children");
      }
      open.pop_back();
      continue;
    }
    if (open.empty() || (open.back().first == 0 && open.back().second == 1) ||
        open.back().second == 3) {
      throw BlossomValidationError("too many children at position " + std::to_string(i));
    }
    auto& [parent, slot] = open.back();
    BlossomKind kind;
    if (ch == 'A') {
      kind = BlossomKind::Arrow;
    } else if (ch == 'F') {
      kind = BlossomKind::Flag;
    } else if (ch == '(') {
      kind = BlossomKind::Inner;
    } else {
      throw BlossomValidationError(std::string("unexpected character in blossom word: ") + ch);
    }
    const auto id = add_node(blossom, kind, parent, slot++);
    if (kind == BlossomKind::Inner) open.emplace_back(id, 0);
  }
  if (open.size() != 1 || open.back().second != 1) {
    throw BlossomValidationError("unbalanced blossom word");
  }
  validate_blossom(blossom);
  return blossom;
}

}  // namespace qmap
