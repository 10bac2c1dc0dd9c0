#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "simcore/enumeration.hpp"
#include "simcore/multicore.hpp"

using namespace simcore;

namespace {

Multipartition mp(const char* text) { return parse_multipartition(text); }

// Bipartitions whose components both have size <= n.
std::vector<Multipartition> small_pairs(int n) {
  std::vector<Multipartition> out;
  for (const auto& p : partitions_up_to(n))
    for (const auto& q : partitions_up_to(n)) out.push_back(Multipartition{p, q});
  return out;
}

}  // namespace

TEST_CASE("parsing") {
  const Multipartition m = mp("[2]|[4,1,1]|[1,1]");
  CHECK(m.level() == 3);
  CHECK(m.size() == 10);
  CHECK(to_string(m) == "[2]|[4,1,1]|[1,1]");
  CHECK(mp("[]|[]") == Multipartition::empty(2));
  const Datum d = parse_datum("0:-1,2");
  CHECK(d.modulus == 0);
  CHECK(d.charges == std::vector<int>{-1, 2});
  CHECK(to_string(parse_datum("4:0,2,1")) == "4:0,2,1");
  CHECK(parse_datum_set("0:1,3,0;0:3,0,1").data.size() == 2);
  CHECK(parse_datum_set("", 3).level == 3);
  CHECK_THROWS_AS(parse_datum("4"), ParseError);
  CHECK_THROWS_AS(parse_datum("-1:0"), ParseError);
  CHECK_THROWS_AS(parse_datum_set("0:1,2;0:1"), ParseError);
  CHECK_THROWS_AS(mp("[2]|"), ParseError);
  CHECK_THROWS_AS(mp("[1,2]|[]"), ParseError);
}

TEST_CASE("contents") {
  const Content c = mp_content(mp("[2]|[4,1,1]|[1,1]"), parse_datum("4:0,2,1"));
  CHECK(c.counts == std::map<int, int>{{0, 4}, {1, 4}, {2, 1}, {3, 1}});
  CHECK(mp_content(Multipartition::empty(3), parse_datum("2:0,1,1")).counts.empty());
  CHECK(mp_content(mp("[1]|[1]"), parse_datum("3:0,0")).counts == std::map<int, int>{{0, 2}});
  CHECK_THROWS_AS(mp_content(mp("[1]|[1]"), parse_datum("3:0,0,0")), PreconditionError);
}

TEST_CASE("weight") {
  CHECK(weight(Multipartition::empty(3), parse_datum("0:4,-1,2")) == 0);
  CHECK(weight(mp("[1]|[1]"), parse_datum("3:0,0")) == 0);
  // ([2],[]) has the same content
  const Multipartition pair = mp("[1]|[1]");
  const Datum d = parse_datum("0:0,1");
  CHECK(weight(pair, d) > 0);
  CHECK_FALSE(is_core_bruteforce(pair, d));
  CHECK(oracle::content_collisions(d, 2).count(pair));
  CHECK(weight(mp("[1]|[1]|[1]"), parse_datum("2:0,0,0")) == 0);
}

TEST_CASE("bipartition core tests") {
  CHECK(is_core_bipartition(Partition{1}, Partition{3, 1}, 3, 0, 1));
  for (int s = 0; s <= 5; ++s)
    for (int c = -2; c <= 2; ++c) CHECK(is_core_bipartition(Partition{}, Partition{}, s, c, 1));
  CHECK_FALSE(is_core_bipartition(Partition{1}, Partition{1}, 0, 0, 1));
  CHECK_FALSE(is_core_bipartition(Partition{1}, Partition{}, 1, 0, 0));
}

TEST_CASE("core examples") {
  CHECK(is_core(mp("[2]|[4,1,1]|[1,1]"), parse_datum("4:0,2,1")));
  CHECK(is_core(Multipartition::empty(2), parse_datum("3:0,1")));
  CHECK(is_core(mp("[1,1,1]|[3,3,1,1,1]|[2,2]"), parse_datum("0:1,3,0")));
  CHECK(is_core(mp("[1,1,1]|[3,3,1,1,1]|[2,2]"), parse_datum_set("0:1,3,0;0:3,0,1")));
  CHECK(is_core_bruteforce(mp("[1]|[1]"), parse_datum("3:0,0")));
  CHECK(is_core_bruteforce(Multipartition::empty(2), parse_datum("2:1,0")));
  CHECK_FALSE(is_core_bruteforce(mp("[1]|[]|[]"), parse_datum("0:0,0,0")));
  CHECK_FALSE(is_core_bruteforce(mp("[]|[1]|[]"), parse_datum("0:0,0,0")));
  CHECK_THROWS_AS(is_core_bruteforce(mp("[6]|[5]"), parse_datum("0:0,0")), PreconditionError);
  CHECK_THROWS_AS(is_core(mp("[1]|[1]"), parse_datum("3:0")), PreconditionError);
}

TEST_CASE("is_core, content uniqueness and weight agree" * doctest::description("components of size <= 5")) {
  const auto pairs = small_pairs(5);
  for (int s = 0; s <= 5; ++s)
    for (int c = -3; c <= 3; ++c)
      for (int d = -3; d <= 3; ++d) {
        const Datum datum{s, {c, d}};
        const auto collide = oracle::content_collisions(datum, 10);
        for (const auto& m : pairs) {
          const bool core = is_core(m, datum);
          const bool unique = s == 1 ? m.is_empty() : !collide.count(m);
          REQUIRE(core == unique);
          REQUIRE(core == (weight(m, datum) == 0));
          REQUIRE(weight(m, datum) >= 0);
          if (m.size() <= 6) REQUIRE(core == is_core_bruteforce(m, datum));
        }
      }
}

TEST_CASE("translating charges leaves the cores unchanged") {
  const auto all = multipartitions_up_to(6, 2);
  for (int s = 0; s <= 5; ++s)
    for (int c = -2; c <= 2; ++c)
      for (int a = -3; a <= 3; ++a) {
        const Datum base{s, {0, c}}, moved{s, {a, c + a}}, wrapped{s, {s, c - 2 * s}};
        for (const auto& m : all) {
          REQUIRE(is_core(m, base) == is_core(m, moved));
          if (s > 0) REQUIRE(is_core(m, base) == is_core(m, wrapped));
        }
      }
}

TEST_CASE("cores for s are cores for multiples of s") {
  const auto all = multipartitions_up_to(6, 2);
  for (int s = 1; s <= 4; ++s)
    for (int t : {0, s, 2 * s, 3 * s})
      for (int c = -2; c <= 2; ++c) {
        const Datum small{s, {0, c}}, large{t, {0, c}};
        for (const auto& m : all)
          if (is_core(m, small)) REQUIRE(is_core(m, large));
      }
}

TEST_CASE("sandwich partners") {
  CHECK(sandwich_partners(Partition{}, 3, 0, 1) == std::vector<Partition>{Partition{}, Partition{1}, Partition{2}});
  CHECK(sandwich_partners(Partition{1}, 3, 0, 1) == std::vector<Partition>{Partition{}, Partition{1, 1}, Partition{3, 1}});
  for (int s = 1; s <= 5; ++s)
    for (int c = -3; c <= 3; ++c) CHECK(sandwich_partners(Partition{}, s, c, c) == std::vector<Partition>{Partition{}});
  CHECK_THROWS_AS(sandwich_partners(Partition{3}, 3, 0, 1), PreconditionError);
  CHECK_THROWS_AS(sandwich_partners(Partition{}, 0, 0, 1), PreconditionError);

  for (int s = 1; s <= 6; ++s)
    for (const auto& p : partitions_up_to(8)) {
      if (!is_s_core(p, s)) continue;
      for (int c = -2; c <= 2; ++c) {
        const auto partners = sandwich_partners(p, s, c, 0);
        REQUIRE(BigInt(partners.size()) == binomial(s, mod_floor(c, s)));
        REQUIRE(std::is_sorted(partners.begin(), partners.end()));
        for (const auto& q : partners) REQUIRE(is_core_bipartition(p, q, s, c, 0));
        // nothing else of moderate size qualifies
        for (const auto& q : partitions_up_to(8))
          if (is_core_bipartition(p, q, s, c, 0)) REQUIRE(std::binary_search(partners.begin(), partners.end(), q));
      }
    }
}

TEST_CASE("s-set form of the bipartition test") {
  for (int s = 2; s <= 5; ++s) {
    std::vector<Partition> cores;
    for (const auto& p : partitions_up_to(9))
      if (is_s_core(p, s)) cores.push_back(p);
    for (const auto& p : cores)
      for (const auto& q : cores)
        for (int a = 0; a < s; ++a) {
          const auto sp = s_set(p, s).representatives, sq = s_set(q, s).representatives;
          bool by_sets = true;
          for (int i = 0; i < s; ++i) {
            const int x = sq[static_cast<std::size_t>(i)] + a, y = sp[static_cast<std::size_t>(mod_floor(i + a, s))];
            by_sets = by_sets && (x == y || x == y + s);
          }
          REQUIRE(is_core_bipartition(p, q, s, 0, a) == by_sets);
        }
  }
}

TEST_CASE("level-one cores are s-cores") {
  for (int s = 0; s <= 5; ++s)
    for (const auto& p : partitions_up_to(9)) REQUIRE(is_core(Multipartition{p}, Datum{s, {1}}) == is_s_core(p, s));
}

TEST_CASE("multipartition enumeration") {
  CHECK(multipartitions_of(0, 3).size() == 1);
  CHECK(multipartitions_of(2, 2).size() == 5);
  CHECK(multipartitions_up_to(2, 2).size() == 8);
  auto all = multipartitions_up_to(5, 3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("datum sets") {
  CHECK_THROWS_AS(DatumSet::of({parse_datum("0:1,2"), parse_datum("0:1")}), PreconditionError);
  const DatumSet t = DatumSet::of({parse_datum("3:0,1"), parse_datum("0:1,0")});
  CHECK(is_core(Multipartition::empty(2), t));
  CHECK(to_string(t) == "3:0,1;0:1,0");
}
