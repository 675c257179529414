#include "qmap/walk.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qmap {

LatticeWalk::LatticeWalk(std::vector<std::int8_t> steps) : steps_(std::move(steps)) {
  for (auto start : steps_) {
    if (start < -1 || start > 1) throw std::domain_error("walk increments must lie in {-1,0,+1}");
  }
}

LatticeWalk LatticeWalk::parse(std::string_view text) {
  std::vector<std::int8_t> steps;
  if (text == ".") return LatticeWalk{};
  steps.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'U': case 'u': case '+': steps.push_back(1); break;
      case 'D': case 'd': case '-': steps.push_back(-1); break;
      case '0': steps.push_back(0); break;
      default:
        throw std::invalid_argument(std::string("unexpected walk character '") + ch + "'");
    }
  }
  return LatticeWalk(std::move(steps));
}

std::string LatticeWalk::to_updown() const {
  std::string out;
  out.reserve(steps_.size());
  for (auto start : steps_) {
    if (start == 0) throw std::domain_error("walk has a zero step; use to_ternary()");
    out.push_back(start > 0 ? 'U' : 'D');
  }
  return out;
}

std::string LatticeWalk::to_ternary() const {
  std::string out;
  out.reserve(steps_.size());
  for (auto start : steps_) out.push_back(start > 0 ? '+' : (start < 0 ? '-' : '0'));
  return out;
}

std::size_t LatticeWalk::count(std::int8_t step) const {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), step));
}

std::int64_t LatticeWalk::final_height() const {
  std::int64_t height = 0;
  for (auto start : steps_) height += start;
  return height;
}

std::vector<std::int64_t> partial_sums(const LatticeWalk& walk) {
  std::vector<std::int64_t> sums(walk.size() + 1, 0);
  for (std::size_t pos = 0; pos < walk.size(); ++pos) sums[pos + 1] = sums[pos] + walk[pos];
  return sums;
}

namespace {

BigInt binomial(std::int64_t size, std::int64_t excess) {
  if (excess < 0 || excess > size) return 0;
  excess = std::min(excess, size - excess);
  BigInt value = 1;
  for (std::int64_t i = 1; i <= excess; ++i) {
    value *= (size - excess + i);
    value /= i;
  }
  return value;
}

}  // namespace

BigInt count_ballot(std::int64_t size, std::int64_t lhs) {
  if (size < 0 || lhs < 0) throw std::domain_error("count_ballot: n and a must be nonnegative");
  if (lhs > size || (size - lhs) % 2 != 0) {
    throw std::domain_error("count_ballot: n - a must be even and nonnegative");
  }
  BigInt value = binomial(size + 1, (size - lhs) / 2) * (lhs + 1);
  return value / (size + 1);
}

LatticeWalk cyclic_shift(const LatticeWalk& walk, std::size_t start) {
  const std::size_t len = walk.size();
  if (len == 0) return walk;
  start %= len;
  std::vector<std::int8_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = walk[(i + start) % len];
  return LatticeWalk(std::move(out));
}

bool WalkClassSpec::contains(const LatticeWalk& walk) const {
  if (size < 0 || excess < 0 || walk.size() != length() || walk.empty()) return false;
  if (walk[walk.size() - 1] != -1) return false;
  return walk.count(1) == static_cast<std::size_t>(size) &&
         walk.count(-1) == static_cast<std::size_t>(size + excess);
}

WalkClassSpec require_member(const LatticeWalk& walk, std::int64_t excess) {
  if (excess < 0) throw std::domain_error("excess k must be nonnegative");
  const auto ups = static_cast<std::int64_t>(walk.count(1));
  WalkClassSpec spec{ups, excess};
  if (walk.count(0) != 0 || !spec.contains(walk)) {
    throw std::domain_error("walk " + walk.to_ternary() + " is not in B(" + std::to_string(ups) +
                            "," + std::to_string(excess) + ")");
  }
  return spec;
}

std::vector<std::size_t> low_records(const LatticeWalk& walk, std::int64_t excess) {
  require_member(walk, excess);
  // Records are the first hitting times of -1, -2, ..., min; keep the last k.
  std::vector<std::size_t> records;
  std::int64_t height = 0;
  std::int64_t lowest = 0;
  for (std::size_t pos = 1; pos <= walk.size(); ++pos) {
    height += walk[pos - 1];
    if (height < lowest) {
      lowest = height;
      records.push_back(pos);
    }
  }
  return {records.end() - excess, records.end()};
}

std::int64_t WalkHeights::dyck_count(std::int64_t i) const {
  if (i < 0 || dyck_down_counts.empty()) return 0;
  if (static_cast<std::size_t>(i) >= dyck_down_counts.size()) return dyck_down_counts.back();
  return dyck_down_counts[i];
}

std::int64_t WalkHeights::min_count(std::int64_t i) const {
  if (i < 0 || min_down_counts.empty()) return 0;
  if (static_cast<std::size_t>(i) >= min_down_counts.size()) return min_down_counts.back();
  return min_down_counts[i];
}

namespace {

std::vector<std::int64_t> cumulative_down_counts(const LatticeWalk& walk,
                                                 const std::vector<std::int64_t>& level) {
  std::int64_t top = 0;
  for (std::size_t pos = 1; pos <= walk.size(); ++pos) {
    if (walk[pos - 1] == -1) top = std::max(top, level[pos]);
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t pos = 1; pos <= walk.size(); ++pos) {
    if (walk[pos - 1] == -1) ++counts[level[pos]];
  }
  for (std::size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
  return counts;
}

}  // namespace

WalkHeights walk_heights(const LatticeWalk& walk, std::int64_t excess) {
  if (excess < 1) throw std::domain_error("walk_heights requires k >= 1");
  WalkHeights out;
  out.low_records = low_records(walk, excess);
  const auto sums = partial_sums(walk);
  const auto& rec = out.low_records;
  const std::int64_t lowest = sums[rec.back()];

  out.height_to_min.resize(sums.size());
  out.dyck_height.resize(sums.size());
  // Before p_1 the walk belongs to the factor that wraps around the end, whose
  // floor sits one level below w(p_1) once the prefix is shifted by -k.
  std::size_t factor = 0;
  for (std::size_t pos = 0; pos < sums.size(); ++pos) {
    out.height_to_min[pos] = sums[pos] - lowest;
    while (factor < rec.size() && rec[factor] <= pos) ++factor;
    if (factor == 0) {
      out.dyck_height[pos] = sums[pos] - sums[rec[0]] - 1;
    } else {
      out.dyck_height[pos] = sums[pos] - sums[rec[factor - 1]];
    }
  }
  out.dyck_down_counts = cumulative_down_counts(walk, out.dyck_height);
  out.min_down_counts = cumulative_down_counts(walk, out.height_to_min);
  return out;
}

bool is_positive_member(const LatticeWalk& walk, std::int64_t excess) {
  if (excess < 1) throw std::domain_error("positivity requires k >= 1");
  require_member(walk, excess);
  std::int64_t height = 0;
  for (std::size_t pos = 0; pos + 1 < walk.size(); ++pos) {
    height += walk[pos];
    if (height <= -excess) return false;
  }
  return true;
}

bool CycleLemmaReport::all_hold() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const ConjugacyClassStats& stats) { return stats.identity_holds; });
}

namespace {

// Walks of length <= 24 packed into a word: bit j set iff step j is up.
struct PackedWalk {
  std::uint32_t bits;
  std::size_t len;

  bool up(std::size_t j) const { return (bits >> j) & 1u; }

  std::uint32_t rotate(std::size_t start) const {
    if (start == 0) return bits;
    const std::uint32_t mask = len == 32 ? ~0u : ((1u << len) - 1u);
    return ((bits >> start) | (bits << (len - start))) & mask;
  }

  // Lexicographic key with D < U on the step sequence.
  static std::uint32_t lex_key(std::uint32_t rhs, std::size_t len) {
    std::uint32_t key = 0;
    for (std::size_t j = 0; j < len; ++j) key = (key << 1) | ((rhs >> j) & 1u);
    return key;
  }

  std::string spell(std::uint32_t rhs) const {
    std::string start(len, 'D');
    for (std::size_t j = 0; j < len; ++j) {
      if ((rhs >> j) & 1u) start[j] = 'U';
    }
    return start;
  }
};

}  // namespace

CycleLemmaReport verify_cycle_lemma(std::int64_t size, std::int64_t excess) {
  if (size < 0 || excess < 1) throw std::domain_error("verify_cycle_lemma needs n >= 0 and k >= 1");
  const auto len = static_cast<std::size_t>(2 * size + excess);
  if (len > kCycleLemmaMaxLength) {
    throw std::length_error("verify_cycle_lemma: 2n+k = " + std::to_string(len) +
                            " exceeds the exhaustive guard of " +
                            std::to_string(kCycleLemmaMaxLength));
  }
  CycleLemmaReport report;
  report.size = size;
  report.excess = excess;

  std::unordered_map<std::uint32_t, std::size_t> class_index;
  // Every subset of n up positions among the first len-1 steps.
  const std::size_t free = len - 1;
  std::vector<std::size_t> pos(static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  while (true) {
    std::uint32_t bits = 0;
    for (auto place : pos) bits |= 1u << place;
    PackedWalk nbr{bits, len};
    ++report.walk_count;

    std::uint32_t best_key = ~0u;
    std::uint32_t best_bits = bits;
    for (std::size_t start = 0; start < len; ++start) {
      const std::uint32_t radius = nbr.rotate(start);
      if ((radius >> (len - 1)) & 1u) continue;  // must end with a down step
      const std::uint32_t key = PackedWalk::lex_key(radius, len);
      if (key < best_key) {
        best_key = key;
        best_bits = radius;
      }
    }
    auto [it, inserted] = class_index.try_emplace(best_key, report.classes.size());
    if (inserted) report.classes.push_back({nbr.spell(best_bits), 0, 0, false});
    auto& cls = report.classes[it->second];
    ++cls.size;
    std::int64_t height = 0;
    bool positive = true;
    for (std::size_t j = 0; j + 1 < len; ++j) {
      height += nbr.up(j) ? 1 : -1;
      if (height <= -excess) {
        positive = false;
        break;
      }
    }
    if (positive) ++cls.positive;

    // next combination
    std::size_t i = pos.size();
    while (i > 0 && pos[i - 1] == free - pos.size() + i - 1) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < pos.size(); ++j) pos[j] = pos[j - 1] + 1;
  }
  for (auto& cls : report.classes) {
    cls.identity_holds = static_cast<std::int64_t>(cls.positive) * (size + excess) ==
                         excess * static_cast<std::int64_t>(cls.size);
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.representative < rhs.representative; });
  return report;
}

std::vector<LatticeWalk> rotation_class(const LatticeWalk& steps) {
  std::vector<LatticeWalk> out;
  std::unordered_set<std::string> seen;
  for (std::size_t start = 0; start < steps.size(); ++start) {
    auto walk = cyclic_shift(steps, start);
    if (walk[walk.size() - 1] != -1) continue;
    if (seen.insert(walk.to_ternary()).second) out.push_back(std::move(walk));
  }
  return out;
}

}  // namespace qmap
