#include "doctest.h"

#include <map>

#include "qmap/verify.hpp"
#include "qmap/walk.hpp"
#include "support.hpp"

using namespace qmap;
using testing_support::all_walks;
using testing_support::random_member;
using testing_support::random_walk;

namespace {

using Heights = std::vector<std::int64_t>;

// Dyck heights recomputed from scratch: start the walk right after its last
// low record, then measure each step against the running minimum.
Heights dyck_heights_oracle(const LatticeWalk& walk) {
  const auto len = static_cast<std::int64_t>(walk.size());
  std::int64_t height = 0, low = 0, last_min = 0;
  for (std::int64_t pos = 1; pos <= len; ++pos) {
    height += walk[pos - 1];
    if (height < low) {
      low = height;
      last_min = pos;
    }
  }
  Heights out(walk.size() + 1);
  height = 0;
  low = 0;
  for (std::int64_t j = 0; j <= len; ++j) {
    if (j > 0) {
      height += walk[(last_min + j - 1) % len];
      low = std::min(low, height);
    }
    out[(last_min + j) % len] = height - low;
  }
  // Positions 0 and len are the same point of the cycle.
  out[len] = out[0];
  return out;
}

std::vector<std::int64_t> down_counts(const LatticeWalk& walk, const Heights& level) {
  std::map<std::int64_t, std::int64_t> at;
  std::int64_t top = 0;
  for (std::size_t pos = 1; pos <= walk.size(); ++pos) {
    if (walk[pos - 1] == -1) {
      ++at[level[pos]];
      top = std::max(top, level[pos]);
    }
  }
  std::vector<std::int64_t> out;
  std::int64_t run = 0;
  for (std::int64_t i = 0; i <= top; ++i) {
    run += at[i];
    out.push_back(run);
  }
  return out;
}

// Meanders counted by dynamic programming over heights.
std::int64_t meanders(std::int64_t len, std::int64_t end) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(len + 2), 0);
  ways[0] = 1;
  for (std::int64_t step = 0; step < len; ++step) {
    std::vector<std::int64_t> next(ways.size(), 0);
    for (std::size_t height = 0; height + 1 < ways.size(); ++height) {
      next[height + 1] += ways[height];
      if (height > 0) next[height - 1] += ways[height];
    }
    ways = next;
  }
  return ways[static_cast<std::size_t>(end)];
}

}  // namespace

TEST_CASE("partial sums") {
  CHECK(partial_sums(LatticeWalk{}) == std::vector<std::int64_t>{0});
  CHECK(partial_sums(LatticeWalk::parse("UDDD")) == std::vector<std::int64_t>{0, 1, 0, -1, -2});

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto walk = random_walk(rng() % 30, true, rng);
    std::vector<std::int8_t> flipped(walk.steps().rbegin(), walk.steps().rend());
    for (auto& start : flipped) start = static_cast<std::int8_t>(-start);
    const auto lhs = partial_sums(walk);
    const auto rhs = partial_sums(LatticeWalk(flipped));
    // Reversing and negating the increments reflects the path about its end.
    for (std::size_t pos = 0; pos < lhs.size(); ++pos) CHECK(rhs[pos] == lhs[lhs.size() - 1 - pos] - lhs.back());
  }
}

TEST_CASE("walk text forms") {
  CHECK(LatticeWalk::parse("UDDU").to_updown() == "UDDU");
  CHECK(LatticeWalk::parse("+0-").to_ternary() == "+0-");
  CHECK_THROWS_AS(LatticeWalk::parse("+0-").to_updown(), std::domain_error);
  CHECK_THROWS_AS(LatticeWalk::parse("UX"), std::invalid_argument);
  CHECK_THROWS_AS(LatticeWalk(std::vector<std::int8_t>{2}), std::domain_error);
}

TEST_CASE("ballot numbers") {
  CHECK(count_ballot(4, 0) == 2);
  CHECK(count_ballot(2, 2) == 1);
  CHECK(count_ballot(3, 1) == 2);
  CHECK_THROWS_AS(count_ballot(3, 0), std::domain_error);
  CHECK_THROWS_AS(count_ballot(2, 4), std::domain_error);
  for (std::int64_t len = 0; len <= 24; ++len) {
    for (std::int64_t end = len % 2; end <= len; end += 2) {
      CHECK(count_ballot(len, end) == meanders(len, end));
    }
  }
  // Far beyond 64 bits.
  CHECK(count_ballot(400, 0) > BigInt(1) << 300);
}

TEST_CASE("cyclic shifts") {
  const auto steps = LatticeWalk::parse("UDDD");
  CHECK(cyclic_shift(steps, 0) == steps);
  CHECK(cyclic_shift(steps, 1) == LatticeWalk::parse("DDDU"));
  CHECK(cyclic_shift(cyclic_shift(steps, 2), 2) == steps);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto walk = random_walk(1 + rng() % 20, false, rng);
    const auto start = rng() % walk.size();
    CHECK(cyclic_shift(cyclic_shift(walk, start), walk.size() - start) == walk);
  }
}

TEST_CASE("low records") {
  CHECK(low_records(LatticeWalk::parse("UDDD"), 2) == std::vector<std::size_t>{3, 4});
  CHECK(low_records(LatticeWalk::parse("DDUD"), 2) == std::vector<std::size_t>{1, 2});
  CHECK(low_records(LatticeWalk::parse("UUDUDDD"), 1) == std::vector<std::size_t>{7});
  CHECK_THROWS_AS(low_records(LatticeWalk::parse("UDDU"), 2), std::domain_error);
  CHECK_THROWS_AS(low_records(LatticeWalk::parse("UDD"), 2), std::domain_error);

  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t size = rng() % 12, excess = 1 + rng() % 4;
    const auto walk = random_member(size, excess, rng);
    const auto rec = low_records(walk, excess);
    const auto sums = partial_sums(walk);
    REQUIRE(rec.size() == static_cast<std::size_t>(excess));
    CHECK(sums[rec.back()] == *std::min_element(sums.begin(), sums.end()));
    for (std::size_t i = 0; i < rec.size(); ++i) {
      CHECK(sums[rec[i]] == excess - 1 - static_cast<std::int64_t>(i) + sums[rec.back()]);
      for (std::size_t index_q = 0; index_q < rec[i]; ++index_q) CHECK(sums[index_q] > sums[rec[i]]);
    }
  }
}

TEST_CASE("walk heights on a hand example") {
  // Records at 3 and 4; the prefix before the first record belongs to the
  // factor that wraps around the end.
  const auto heights = walk_heights(LatticeWalk::parse("UDDD"), 2);
  CHECK(heights.dyck_height == std::vector<std::int64_t>{0, 1, 0, 0, 0});
  CHECK(heights.height_to_min == std::vector<std::int64_t>{2, 3, 2, 1, 0});
  CHECK(heights.dyck_down_counts == std::vector<std::int64_t>{3});
  CHECK(heights.min_down_counts == std::vector<std::int64_t>{1, 2, 3});
  CHECK(heights.dyck_count(5) == 3);
  CHECK(heights.min_count(-1) == 0);
}

TEST_CASE("walk heights against the rotated-walk oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t size = rng() % 15, excess = 1 + rng() % 4;
    const auto walk = random_member(size, excess, rng);
    INFO(walk.to_updown() << " k=" << excess);
    const auto heights = walk_heights(walk, excess);
    const auto sums = partial_sums(walk);
    const auto low = *std::min_element(sums.begin(), sums.end());
    CHECK(heights.dyck_height == dyck_heights_oracle(walk));
    for (std::size_t pos = 0; pos < sums.size(); ++pos) {
      CHECK(heights.height_to_min[pos] == sums[pos] - low);
      CHECK(heights.dyck_height[pos] >= 0);
      CHECK(heights.dyck_height[pos] <= heights.height_to_min[pos]);
      CHECK(heights.height_to_min[pos] <= heights.dyck_height[pos] + excess);
    }
    CHECK(heights.dyck_down_counts == down_counts(walk, heights.dyck_height));
    CHECK(heights.min_down_counts == down_counts(walk, heights.height_to_min));
    CHECK(heights.dyck_down_counts.back() == size + excess);
    for (std::int64_t i = 0; i < 2 * size + excess; ++i) {
      CHECK(heights.min_count(i) <= heights.dyck_count(i));
      CHECK(heights.dyck_count(i) <= heights.min_count(i + excess));
    }
  }
}

TEST_CASE("conjugates share Dyck-height counts and compare on height-to-min") {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const auto& walk : all_walks(len)) {
      const auto size = testing_support::ups(walk);
      const auto excess = static_cast<std::int64_t>(len) - 2 * size;
      if (excess < 1 || walk[len - 1] != -1) continue;
      const auto base = walk_heights(walk, excess);
      for (const auto& other : rotation_class(walk)) {
        const auto heights = walk_heights(other, excess);
        CHECK(heights.dyck_down_counts == base.dyck_down_counts);
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(len); ++i) {
          CHECK(base.min_count(i) <= heights.min_count(i + excess));
        }
      }
    }
  }
}

TEST_CASE("positive members") {
  CHECK(is_positive_member(LatticeWalk::parse("UDDD"), 2));
  CHECK_FALSE(is_positive_member(LatticeWalk::parse("DDUD"), 2));
  CHECK_THROWS_AS(is_positive_member(LatticeWalk::parse("UD"), 0), std::domain_error);
  // Positive exactly when the lowest record is the last step.
  for (std::size_t len = 1; len <= 13; ++len) {
    for (const auto& walk : all_walks(len)) {
      const auto excess = static_cast<std::int64_t>(len) - 2 * testing_support::ups(walk);
      if (excess < 1 || excess > 3 || walk[len - 1] != -1) continue;
      CHECK(is_positive_member(walk, excess) == (low_records(walk, excess).back() == len));
    }
  }
}

TEST_CASE("cycle lemma") {
  const auto small = verify_cycle_lemma(1, 2);
  REQUIRE(small.classes.size() == 1);
  CHECK(small.classes[0].size == 3);
  CHECK(small.classes[0].positive == 2);
  CHECK(small.classes[0].representative == "DDUD");

  const auto trivial = verify_cycle_lemma(0, 1);
  REQUIRE(trivial.classes.size() == 1);
  CHECK(trivial.classes[0].size == 1);
  CHECK(trivial.classes[0].positive == 1);

  for (std::int64_t size = 0; size <= 4; ++size) {
    for (std::int64_t excess = 1; excess <= 3; ++excess) {
      const auto report = verify_cycle_lemma(size, excess);
      CHECK(report.all_hold());
      // Classes partition B(n,k), counted here by brute force.
      std::size_t total = 0;
      for (const auto& stats : report.classes) total += stats.size;
      CHECK(total == report.walk_count);
      std::size_t members = 0;
      for (const auto& walk : all_walks(2 * size + excess)) {
        if (WalkClassSpec{size, excess}.contains(walk)) ++members;
      }
      CHECK(report.walk_count == members);
    }
  }
  CHECK_THROWS_AS(verify_cycle_lemma(12, 1), std::length_error);
}

TEST_CASE("rotations carry low records and Dyck-height counts") {
  for (std::int64_t excess = 1; excess <= 16; ++excess) {
    for (std::int64_t size = 0; 2 * size + excess <= 16; ++size) {
      const auto report = verify_rotation_invariance(size, excess);
      CHECK(report.ok());
    }
  }
}
