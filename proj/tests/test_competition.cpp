#include <doctest.h>

#include <algorithm>

#include "dpo/competition.hpp"
#include "dpo/patterns.hpp"
#include "dpo/rng.hpp"
#include "support.hpp"

using namespace dpo;

namespace {

std::vector<Point2> staircase_points(int n) {
  auto s = generate_staircase(n);
  auto points = std::move(s.a);
  points.insert(points.end(), s.b.begin(), s.b.end());
  return points;
}

}  // namespace

TEST_CASE("build validates ids and coordinates") {
  CHECK_NOTHROW(DoublyPartialOrder::build({{"a", 0, 0}, {"b", 1, 1}}));
  CHECK_THROWS_AS(DoublyPartialOrder::build({{"a", 0, 0}, {"a", 1, 1}}), Error);
  CHECK_THROWS_AS(DoublyPartialOrder::build({{"a", 0, 0}, {"b", 0, 0}}), Error);
}

TEST_CASE("arcs follow strict dominance") {
  const auto d = DoublyPartialOrder::build({{"a", 0, 0}, {"b", 1, 1}});
  CHECK(d.in_neighborhood("a") == std::vector<std::string>{"b"});
  CHECK(d.in_neighborhood("b").empty());

  const auto incomparable = DoublyPartialOrder::build({{"a", 0, 2}, {"b", 2, 0}});
  CHECK(incomparable.in_neighborhood("a").empty());
  CHECK(incomparable.in_neighborhood("b").empty());

  CHECK_THROWS_AS(d.in_neighborhood("zzz"), Error);
}

TEST_CASE("in-neighborhoods on the staircase") {
  const auto d = DoublyPartialOrder::build(staircase_points(1));
  // b0 = (-1/3, 2/3) is dominated by a0 = (0,2) and a1 = (1,1) only.
  CHECK(d.in_neighborhood("b0") == std::vector<std::string>{"a0", "a1"});
  CHECK(d.in_neighborhood("a0").empty());
}

TEST_CASE("in-neighborhood of the origin in the M-gadget") {
  auto points = staircase_points(3);
  points.push_back({"o", 0, 0});
  const auto d = DoublyPartialOrder::build(points);
  // Everything strictly above and right of the origin: the staircase interiors.
  CHECK(d.in_neighborhood("o") == std::vector<std::string>{"a1", "a2", "a3", "b1", "b2"});
}

TEST_CASE("competition hypergraph of the staircase is the path on A") {
  const auto result = competition_hypergraph(DoublyPartialOrder::build(staircase_points(1)));
  CHECK(result.hypergraph.edges() ==
        std::vector<std::vector<std::string>>{{"a0", "a1"}, {"a1", "a2"}});
  CHECK(isolated_vertices(result.hypergraph) == std::vector<std::string>{"b0", "b1"});

  REQUIRE(result.witnesses.size() == 2);
  CHECK(result.witnesses[0].second == std::vector<std::string>{"b0"});
  CHECK(result.witnesses[1].second == std::vector<std::string>{"b1"});
}

TEST_CASE("competition hypergraph of the 7-point M-gadget") {
  const auto result = competition_hypergraph(DoublyPartialOrder::build(gadget_dpo(PatternFamily::M, 1)));
  CHECK(result.hypergraph.edges() == std::vector<std::vector<std::string>>{
                                         {"a0", "a1"}, {"a1", "a2"}, {"a1", "c1"}});
  for (const auto& [edge, witnesses] : result.witnesses) {
    if (edge == std::vector<std::string>{"a1", "c1"}) {
      CHECK(witnesses == std::vector<std::string>{"c0"});
    }
  }
}

TEST_CASE("competition hypergraph of a single point is edgeless") {
  const auto result = competition_hypergraph(DoublyPartialOrder::build({{"a", 0, 0}}));
  CHECK(result.hypergraph.vertex_count() == 1);
  CHECK(result.hypergraph.edge_count() == 0);
}

TEST_CASE("hyperedge members dominate their witnesses") {
  Rng rng(201);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_dpo(rng.next(), 9);
    const auto result = competition_hypergraph(d);
    for (const auto& [edge, witnesses] : result.witnesses) {
      CHECK_FALSE(witnesses.empty());
      for (const auto& w : witnesses) {
        for (const auto& m : edge) {
          CHECK(strictly_dominated(d.point(w), d.point(m)));
        }
      }
    }
  }
}

TEST_CASE("dominated vertices inherit hyperedge membership") {
  Rng rng(203);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_dpo(rng.next(), 9);
    const auto ch = competition_hypergraph(d).hypergraph;
    for (const auto& x : d.points()) {
      for (const auto& y : d.points()) {
        if (!strictly_dominated(x, y)) continue;
        for (const auto& edge : ch.edges()) {
          if (std::binary_search(edge.begin(), edge.end(), x.id)) {
            CHECK(std::binary_search(edge.begin(), edge.end(), y.id));
          }
        }
      }
    }
  }
}

TEST_CASE("competition graph on the staircases") {
  const auto g1 = competition_graph(DoublyPartialOrder::build(staircase_points(1)));
  CHECK(g1.edges == std::vector<std::array<std::string, 2>>{{"a0", "a1"}, {"a1", "a2"}});

  const auto g2 = competition_graph(DoublyPartialOrder::build(staircase_points(2)));
  CHECK(g2.edges == std::vector<std::array<std::string, 2>>{
                        {"a0", "a1"}, {"a1", "a2"}, {"a2", "a3"}});

  const auto lonely = competition_graph(DoublyPartialOrder::build({{"a", 0, 2}, {"b", 2, 0}}));
  CHECK(lonely.edges.empty());
}

TEST_CASE("competition graph matches co-membership in in-neighborhoods") {
  Rng rng(207);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_dpo(rng.next(), 9);
    const auto g = competition_graph(d);
    std::vector<std::array<std::string, 2>> expected;
    for (const auto& u : d.points()) {
      for (const auto& v : d.points()) {
        if (!(u.id < v.id)) continue;
        bool share = false;
        for (const auto& w : d.points()) {
          const auto hood = d.in_neighborhood(w.id);
          share = std::binary_search(hood.begin(), hood.end(), u.id) &&
                  std::binary_search(hood.begin(), hood.end(), v.id);
          if (share) break;
        }
        if (share) expected.push_back({u.id, v.id});
      }
    }
    std::sort(expected.begin(), expected.end());
    CHECK(g.edges == expected);
  }
}

TEST_CASE("structure lemmas hold on fixed point sets") {
  CHECK(verify_structure_lemmas(DoublyPartialOrder::build(staircase_points(1))).empty());
  CHECK(verify_structure_lemmas(DoublyPartialOrder::build({{"a", 0, 0}})).empty());
  CHECK(verify_structure_lemmas(DoublyPartialOrder::build(gadget_dpo(PatternFamily::F, 3))).empty());
}

TEST_CASE("structure lemmas hold on random point sets") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto d = random_dpo(seed, 10);
    CHECK(verify_structure_lemmas(d).empty());
  }
}

TEST_CASE("competition hypergraphs never trace to C, O1, or O2") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto ch = competition_hypergraph(random_dpo(seed, 9)).hypergraph;
    const auto witness = find_forbidden_witness(
        ch, {PatternFamily::C, PatternFamily::O1, PatternFamily::O2}, ch.vertex_count());
    CHECK_FALSE(witness.has_value());
  }
}

TEST_CASE("random point sets are reproducible") {
  const auto a = random_dpo(42, 10);
  const auto b = random_dpo(42, 10);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.points()[i].id == b.points()[i].id);
    CHECK(same_coordinates(a.points()[i], b.points()[i]));
  }
}
