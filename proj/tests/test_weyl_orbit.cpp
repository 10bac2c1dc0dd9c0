#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "simcore/weyl_orbit.hpp"

using namespace simcore;

namespace {

Multipartition mp(const char* text) { return parse_multipartition(text); }

std::vector<Multipartition> filter(const Datum& d, int n) {
  std::vector<Multipartition> out;
  for (const auto& m : multipartitions_up_to(n, d.level()))
    if (is_core(m, d)) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Datum> small_data() {
  std::vector<Datum> out;
  for (int s : {0, 2, 3, 4}) {
    out.push_back(Datum{s, {0}});
    for (int c = -2; c <= 2; ++c) out.push_back(Datum{s, {0, c}});
    for (const auto& c : std::vector<std::vector<int>>{{0, 0, 0}, {0, 1, 2}, {0, -1, 1}, {0, 2, 1}, {1, 3, 0}})
      out.push_back(Datum{s, c});
  }
  return out;
}

}  // namespace

TEST_CASE("generator action on the empty bipartition") {
  const Datum d = parse_datum("3:0,1");
  const auto e = Multipartition::empty(2);
  CHECK(act_generator(e, d, ResidueClass::of(1, 3)) == mp("[]|[1]"));
  CHECK(act_generator(e, d, ResidueClass::of(0, 3)) == mp("[1]|[]"));
  CHECK(act_generator(e, d, ResidueClass::of(2, 3)) == e);
}

TEST_CASE("generator action errors") {
  CHECK_THROWS_AS(act_generator(Multipartition::empty(1), Datum{1, {0}}, ResidueClass::of(0, 1)), PreconditionError);
  CHECK_THROWS_AS(act_generator(Multipartition::empty(1), Datum{3, {0}}, ResidueClass::of(0, 4)), PreconditionError);
  CHECK_THROWS_AS(act_generator(Multipartition::empty(1), Datum{0, {0}}, ResidueClass::of(0, 2)), PreconditionError);
  CHECK_THROWS_AS(orbit_members(Datum{1, {0, 0}}, 4), PreconditionError);
  CHECK_THROWS_AS(orbit_members(Datum{3, {0, 0}}, -1), PreconditionError);
}

TEST_CASE("involution on all small states") {
  for (const auto& d : small_data()) {
    const auto states = multipartitions_up_to(d.level() == 3 ? 4 : 6, d.level());
    for (const auto& i : orbit_generators(d, 6))
      for (const auto& m : states) REQUIRE(act_generator(act_generator(m, d, i), d, i) == m);
  }
}

TEST_CASE("the action preserves cores and some generator shrinks each core") {
  for (const auto& d : small_data()) {
    const auto gens = orbit_generators(d, 8);
    for (const auto& m : filter(d, 7)) {
      bool shrinks = false;
      for (const auto& i : gens) {
        const auto n = act_generator(m, d, i);
        REQUIRE(is_core(n, d));
        shrinks = shrinks || n.size() < m.size();
      }
      REQUIRE((m.is_empty() || shrinks));
    }
  }
}

TEST_CASE("non-cores stay non-cores") {
  const Datum d = parse_datum("3:0,1");
  for (const auto& m : multipartitions_up_to(5, 2))
    if (!is_core(m, d))
      for (const auto& i : orbit_generators(d, 5)) REQUIRE_FALSE(is_core(act_generator(m, d, i), d));
}

TEST_CASE("orbit equals the core filter") {
  for (const auto& d : small_data()) {
    const int n = d.level() == 3 ? 7 : 8;
    CAPTURE(to_string(d));
    const auto expected = filter(d, n);
    REQUIRE(orbit_members(d, n) == expected);
    REQUIRE(serial::orbit_members(d, n) == expected);
  }
  const Datum d = parse_datum("4:0,2,1");
  CHECK(orbit_members(d, 8) == filter(d, 8));
}

TEST_CASE("trivial orbit") {
  for (const auto& d : small_data()) CHECK(orbit_members(d, 0) == std::vector<Multipartition>{Multipartition::empty(d.level())});
}

TEST_CASE("orbit graph nodes and edges") {
  const Datum d = parse_datum("3:0,1");
  const auto nodes = oracle::orbit_graph_nodes();
  const auto orbit = orbit_members(d, 11);
  for (const auto& m : nodes) {
    CAPTURE(to_string(m));
    REQUIRE(std::binary_search(orbit.begin(), orbit.end(), m));
  }
  const auto small = orbit_members(d, 6);
  for (const auto& m : nodes)
    if (m.size() <= 6) REQUIRE(std::binary_search(small.begin(), small.end(), m));
  const auto eight = orbit_members(d, 8);
  CHECK(std::binary_search(eight.begin(), eight.end(), mp("[3,1]|[2,1,1]")));
  for (const auto& [from, to, gen] : oracle::orbit_graph_edges()) {
    CAPTURE(from);
    CAPTURE(to);
    const auto& a = nodes[static_cast<std::size_t>(from - 1)];
    const auto& b = nodes[static_cast<std::size_t>(to - 1)];
    REQUIRE(act_generator(a, d, ResidueClass::of(gen, 3)) == b);
    REQUIRE(act_generator(b, d, ResidueClass::of(gen, 3)) == a);
  }
}

TEST_CASE("orbit output is sorted and duplicate free") {
  const auto orbit = orbit_members(parse_datum("0:0,1"), 10);
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
  CHECK(std::adjacent_find(orbit.begin(), orbit.end()) == orbit.end());
  CHECK(orbit == serial::orbit_members(parse_datum("0:0,1"), 10));
}
