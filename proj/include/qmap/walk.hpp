#pragma once

// Lattice walks, the walk classes B(n,k) / D(n,k), cyclic shifts, low records
// and the Dyck / height-to-min statistics used by the conjugation arguments.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmap {

using BigInt = boost::multiprecision::cpp_int;

/// A walk on the integers stored as its increments. Partial sums are never
/// cached; call partial_sums() when heights are needed.
class LatticeWalk {
 public:
  LatticeWalk() = default;
  explicit LatticeWalk(std::vector<std::int8_t> steps);

  /// Parses "UDDU" (steps +1/-1) or "+0-" (steps +1/0/-1). "." is the empty walk.
  static LatticeWalk parse(std::string_view text);

  /// U/D spelling; throws std::domain_error if the walk has a zero step.
  std::string to_updown() const;
  /// +/0/- spelling, used for label walks.
  std::string to_ternary() const;

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::int8_t operator[](std::size_t i) const { return steps_[i]; }
  std::span<const std::int8_t> steps() const { return steps_; }

  std::size_t count(std::int8_t step) const;
  std::int64_t final_height() const;

  bool operator==(const LatticeWalk&) const = default;

 private:
  std::vector<std::int8_t> steps_;
};

/// w(0) = 0 and w(p) = w(p-1) + increment p, for p = 0..size.
std::vector<std::int64_t> partial_sums(const LatticeWalk& walk);

/// Number of nonnegative +-1 meanders of length n ending at height a:
/// (a+1)/(n+1) * binom(n+1, (n-a)/2). Throws std::domain_error on bad parity.
BigInt count_ballot(std::int64_t size, std::int64_t lhs);

/// Rotation by s: result[i] = w[(i+s) mod size].
LatticeWalk cyclic_shift(const LatticeWalk& walk, std::size_t start);

/// Parameters of the class B(n,k): n up steps, n+k down steps, last step down.
struct WalkClassSpec {
  std::int64_t size = 0;
  std::int64_t excess = 0;

  std::size_t length() const { return static_cast<std::size_t>(2 * size + excess); }
  bool contains(const LatticeWalk& walk) const;
};

/// Infers (n,k) from w and the requested excess k; throws std::domain_error
/// when w is not a member of B(n,k).
WalkClassSpec require_member(const LatticeWalk& walk, std::int64_t excess);

/// The k lowest left-to-right records p_1 < ... < p_k (1-based step indices).
/// A record is a step p >= 1 with w(q) > w(p) for every q < p, q = 0 included.
std::vector<std::size_t> low_records(const LatticeWalk& walk, std::int64_t excess);

struct WalkHeights {
  std::vector<std::int64_t> dyck_height;     // indexed by p = 0..size
  std::vector<std::int64_t> height_to_min;   // indexed by p = 0..size
  std::vector<std::int64_t> dyck_down_counts;  // l_i: down steps ending at Dyck height <= i
  std::vector<std::int64_t> min_down_counts;   // h_i: down steps ending at height-to-min <= i
  std::vector<std::size_t> low_records;

  /// Cumulative counts saturate at the total number of down steps past the end.
  std::int64_t dyck_count(std::int64_t i) const;
  std::int64_t min_count(std::int64_t i) const;
};

/// Dyck height relative to the k Dyck factors cut at the low records, and the
/// height above the global minimum. Requires k >= 1.
WalkHeights walk_heights(const LatticeWalk& walk, std::int64_t excess);

/// True iff w(p) > -k for all p < size. Requires k >= 1 and w in B(n,k).
bool is_positive_member(const LatticeWalk& walk, std::int64_t excess);

struct ConjugacyClassStats {
  std::string representative;  // lexicographically least rotation ending in D
  std::size_t size = 0;
  std::size_t positive = 0;
  bool identity_holds = false;  // (n+k) * positive == k * size
};

struct CycleLemmaReport {
  std::int64_t size = 0;
  std::int64_t excess = 0;
  std::size_t walk_count = 0;
  std::vector<ConjugacyClassStats> classes;
  bool all_hold() const;
};

/// Largest walk length verify_cycle_lemma accepts.
inline constexpr std::size_t kCycleLemmaMaxLength = 24;

/// Exhaustively partitions B(n,k) into rotation classes and checks the cycle
/// lemma on each. Refuses (std::length_error) when 2n+k exceeds the guard.
CycleLemmaReport verify_cycle_lemma(std::int64_t size, std::int64_t excess);

/// Distinct rotations of w that end with a down step, in shift order.
std::vector<LatticeWalk> rotation_class(const LatticeWalk& walk);

}  // namespace qmap
