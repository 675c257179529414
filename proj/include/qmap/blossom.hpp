#pragma once

// Blossom trees: every inner node has degree four and carries one arrow leaf;
// the other leaves are flags and one flag is the root. They encode embedded
// trees, and rerooting them realizes the cyclic shifts of their label walk.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmap/embedded_tree.hpp"
#include "qmap/random.hpp"
#include "qmap/walk.hpp"

namespace qmap {

enum class BlossomKind : std::uint8_t { Inner, Arrow, Flag };

/// Nodes in preorder; node 0 is the root flag and its single child is child[0].
/// Inner nodes have three children, listed in the order the labelling process
/// meets them.
struct BlossomTree {
  std::vector<BlossomKind> kind;
  std::vector<std::int32_t> parent;
  std::vector<std::array<std::int32_t, 3>> child;

  std::size_t node_count() const { return kind.size(); }
  std::size_t inner_count() const;
  bool operator==(const BlossomTree&) const = default;
};

class BlossomValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws BlossomValidationError when the structure is not a blossom tree.
void validate_blossom(const BlossomTree& blossom);

struct FlagLabelling {
  std::vector<std::int64_t> labels;  // normal flags in labelling order
  LatticeWalk walk;                  // +1 per arrow, -1 per flag, root flag last; in B(n,2)
};

/// Leaves in labelling order; the root flag (node 0) comes last.
std::vector<std::int32_t> leaf_order(const BlossomTree& blossom);

/// Starts at label 2 after the root, +1 at arrows, -1 then write at flags.
FlagLabelling labelling_process(const BlossomTree& blossom);

/// Requires root_label == 1.
BlossomTree embedded_to_blossom(const EmbeddedTree& embedded);
EmbeddedTree blossom_to_embedded(const BlossomTree& blossom);

/// Makes the flag at position `leaf_index` of leaf_order() the root. The new
/// labelling walk is the old one shifted by leaf_index + 1.
BlossomTree reroot(const BlossomTree& blossom, std::size_t leaf_index);

/// Distinct rerootings of b at each of its flags, b first.
std::vector<BlossomTree> conjugacy_class(const BlossomTree& blossom);

/// True iff the tree decodes to a well-labelled tree (its walk is positive).
bool encodes_well_labelled(const BlossomTree& blossom);

struct CoupledPair {
  EmbeddedTree well_labelled;
  EmbeddedTree embedded;
};

/// Rotates the blossom tree of u to the low record `choice` (0 or 1) of its walk.
EmbeddedTree conjugate_well_labelled(const EmbeddedTree& embedded, int choice);

/// u uniform on embedded trees with n edges, w uniform on well-labelled trees,
/// both from one conjugacy class.
CoupledPair sample_well_labelled_coupled(std::size_t size, Rng& rng);

std::string to_text(const BlossomTree& blossom);
BlossomTree parse_blossom(std::string_view text);

}  // namespace qmap
