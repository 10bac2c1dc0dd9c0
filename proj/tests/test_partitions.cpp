#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "simcore/partitions.hpp"

using namespace simcore;

namespace {

const Partition kExample{6, 4, 2, 1, 1};

// Members of b in [lo, hi].
std::vector<int> window(const ShiftedBetaSet& b, int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n)
    if (beta_contains(b, n)) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("partition construction") {
  CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
  CHECK(Partition{3, 1}.size() == 4);
  CHECK(Partition{}.empty());
  CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
  CHECK_THROWS_AS(Partition({2, -1}), PreconditionError);
  CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
  CHECK(Partition{2} < Partition{1, 1, 1});
  CHECK(Partition{1, 1} < Partition{2});
}

TEST_CASE("parsing and printing") {
  CHECK(parse_partition("[6,4,2,1,1]") == kExample);
  CHECK(parse_partition(" [ 6, 4 ,2,1,1 ] ") == kExample);
  CHECK(parse_partition("[]").empty());
  CHECK(to_string(kExample) == "[6,4,2,1,1]");
  CHECK_THROWS_AS(parse_partition("6,4"), ParseError);
  CHECK_THROWS_AS(parse_partition("[1,,2]"), ParseError);
  CHECK_THROWS_AS(parse_partition("[a]"), ParseError);
  CHECK_THROWS(parse_partition("[1,2]"));
}

TEST_CASE("hook counts on the worked example") {
  CHECK(hook_count(kExample, 5) >= 1);
  CHECK(hook_count(kExample, 3) == 0);
  for (int a = 1; a <= 6; ++a) CHECK(hook_count(Partition{}, a) == 0);
  CHECK_THROWS_AS(hook_count(kExample, 0), PreconditionError);
}

TEST_CASE("core conventions") {
  CHECK(is_s_core(kExample, 3));
  CHECK_FALSE(is_s_core(Partition{1}, 1));
  CHECK(is_s_core(Partition{}, 1));
  for (int k = 0; k <= 9; ++k) CHECK(is_s_core(Partition{k}, 0));
}

TEST_CASE("contents") {
  const Content c = content(kExample, 3, 0);
  CHECK(c.multiplicity(0) == 4);
  CHECK(c.multiplicity(1) == 4);
  CHECK(c.multiplicity(2) == 6);
  CHECK(c.total() == kExample.size());
  CHECK(content(Partition{}, 3, 2).counts.empty());
  const Content d = content(Partition{2}, 4, 0);
  CHECK(d.counts == std::map<int, int>{{0, 1}, {1, 1}});
  const Content z = content(Partition{2, 1}, 0, 5);
  CHECK(z.counts == std::map<int, int>{{4, 1}, {5, 1}, {6, 1}});
}

TEST_CASE("beta-set membership") {
  CHECK(beta_contains(ShiftedBetaSet{Partition{}, 0}, -1));
  CHECK_FALSE(beta_contains(ShiftedBetaSet{Partition{}, 0}, 0));
  CHECK(beta_contains(ShiftedBetaSet{Partition{1}, 0}, 0));
  // a shift translates the set: {1,-1,-2,...} does not contain 0
  CHECK_FALSE(beta_superset(ShiftedBetaSet{Partition{1}, 1}, ShiftedBetaSet{Partition{1}, 0}));
  CHECK(beta_superset(ShiftedBetaSet{Partition{}, 1}, ShiftedBetaSet{Partition{}, 0}));
  CHECK(beta_superset(ShiftedBetaSet{Partition{1}, 1}, ShiftedBetaSet{Partition{}, 0}));
  CHECK_FALSE(beta_superset(ShiftedBetaSet{Partition{}, 0}, ShiftedBetaSet{Partition{}, 1}));
  CHECK(beta_superset(ShiftedBetaSet{kExample, -3}, ShiftedBetaSet{kExample, -3}));
}

TEST_CASE("normalisation") {
  auto n0 = normalize_beta(BetaSpec{0, {}});
  CHECK(n0.partition.empty());
  CHECK(n0.shift == 0);
  auto n1 = normalize_beta(BetaSpec{0, {0}});
  CHECK(n1.partition.empty());
  CHECK(n1.shift == 1);
  auto n2 = normalize_beta(BetaSpec{0, {1}});
  CHECK(n2.partition == Partition{1});
  CHECK(n2.shift == 1);
  auto n3 = normalize_beta(BetaSpec{2, {-5, 7, 4, 4}});
  CHECK(window(n3, -10, 10) == std::vector<int>{-10, -9, -8, -7, -6, -5, -4, -3, -2, -1, 0, 1, 4, 7});
}

TEST_CASE("normalisation round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    BetaSpec spec{static_cast<int>(rng() % 11) - 5, {}};
    for (int k = 0; k < 5; ++k) spec.exceptional.push_back(static_cast<int>(rng() % 21) - 8);
    const auto b = normalize_beta(spec);
    for (int n = -20; n <= 20; ++n) {
      bool expected = n < spec.threshold || std::count(spec.exceptional.begin(), spec.exceptional.end(), n) > 0;
      CHECK(beta_contains(b, n) == expected);
    }
  }
}

TEST_CASE("s-sets on the table rows") {
  auto reps = [](const Partition& p) {
    auto x = s_set(p, 3).representatives;
    return std::set<int>(x.begin(), x.end());
  };
  CHECK(reps(Partition{1}) == std::set<int>{3, 1, -1});
  CHECK(reps(Partition{}) == std::set<int>{0, 1, 2});
  CHECK(reps(Partition{2}) == std::set<int>{0, 4, -1});
  CHECK_THROWS_AS(s_set(Partition{3}, 3), PreconditionError);
  CHECK_THROWS_AS(s_core_from_s_set(SSet{3, {0, 1, 5}}), PreconditionError);
  CHECK_THROWS_AS(s_core_from_s_set(SSet{3, {0, 4, 2}}), PreconditionError);
}

TEST_CASE("hook counts agree with the diagram" * doctest::description("beta-set count vs. hook lengths")) {
  for (const auto& p : partitions_up_to(12))
    for (int a = 1; a <= 12; ++a) {
      REQUIRE(hook_count(p, a) == oracle::hooks_by_diagram(p, a));
      REQUIRE(hook_count_diagram(p, a) == oracle::hooks_by_diagram(p, a));
    }
}

TEST_CASE("charge law") {
  for (const auto& p : partitions_up_to(12))
    for (int c = -5; c <= 5; ++c) REQUIRE(ShiftedBetaSet{p, c}.charge() == c);
}

TEST_CASE("beta-set difference counts equal the charge difference") {
  const auto parts = partitions_up_to(8);
  for (const auto& p : parts)
    for (const auto& q : parts)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; d += 2) {
          ShiftedBetaSet x{p, c}, y{q, d};
          int lo = std::min(x.threshold(), y.threshold()), hi = std::max(x.top(), y.top());
          int only_x = 0, only_y = 0;
          for (int n = lo; n <= hi; ++n) {
            bool in_x = beta_contains(x, n), in_y = beta_contains(y, n);
            only_x += in_x && !in_y;
            only_y += in_y && !in_x;
          }
          REQUIRE(only_x - only_y == c - d);
          if (beta_superset(x, y)) REQUIRE(c >= d);
        }
}

TEST_CASE("s-set round trip") {
  for (int s = 1; s <= 6; ++s) {
    // every choice of representatives in [-20, 20] with the right sum, reached by moving beads in pairs
    std::vector<int> base(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) base[static_cast<std::size_t>(i)] = i;
    std::mt19937 rng(static_cast<unsigned>(s));
    for (int trial = 0; trial < 400; ++trial) {
      auto reps = base;
      for (int step = 0; step < 6 && s > 1; ++step) {
        std::size_t i = rng() % static_cast<unsigned>(s), j = rng() % static_cast<unsigned>(s);
        if (i == j || reps[i] + s > 20 || reps[j] - s < -20) continue;
        reps[i] += s;
        reps[j] -= s;
      }
      const SSet x{s, reps};
      const Partition p = s_core_from_s_set(x);
      REQUIRE(is_s_core(p, s));
      REQUIRE(s_set(p, s) == x);
      int sum = 0;
      for (int r : x.representatives) sum += r;
      REQUIRE(sum == s * (s - 1) / 2);
    }
  }
}

TEST_CASE("s-sets of g-cores") {
  // for a g-core with g | s, the s-set is the g-set spread by multiples of g
  for (int g = 1; g <= 3; ++g)
    for (int s = g; s <= 6; s += g)
      for (const auto& p : partitions_up_to(10)) {
        if (!is_s_core(p, g)) continue;
        const auto small = s_set(p, g).representatives;
        std::set<int> spread;
        for (int x : small)
          for (int k = 0; k < s / g; ++k) spread.insert(x + k * g);
        const auto big = s_set(p, s).representatives;
        REQUIRE(std::set<int>(big.begin(), big.end()) == spread);
      }
}

TEST_CASE("cores are determined by their content" * doctest::description("brute-force uniqueness oracle")) {
  for (int n = 0; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    for (int s = 2; s <= 6; ++s) {
      std::map<std::map<int, int>, int> seen;
      for (const auto& p : parts) ++seen[content(p, s, 0).counts];
      for (const auto& p : parts) REQUIRE(is_s_core(p, s) == (seen[content(p, s, 0).counts] == 1));
    }
  }
}

TEST_CASE("removable nodes") {
  CHECK(removable_count(Partition{}) == 0);
  CHECK(removable_count(Partition{3, 3, 1}) == 2);
  CHECK(removable_count(kExample) == 4);
  for (const auto& p : partitions_up_to(10)) REQUIRE(removable_count(p) == hook_count(p, 1));
}

TEST_CASE("partition enumeration") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions_of(n);
    CHECK(ps.size() == counts[static_cast<std::size_t>(n)]);
    CHECK(std::is_sorted(ps.begin(), ps.end()));
  }
  CHECK(partitions_up_to(4).size() == 12);
}

TEST_CASE("residue classes") {
  CHECK(ResidueClass::of(-1, 3) == ResidueClass{3, 2});
  CHECK(ResidueClass::of(-1, 0) == ResidueClass{0, -1});
  CHECK(mod_floor(-7, 3) == 2);
  CHECK(mod_floor(-7, 0) == -7);
}
