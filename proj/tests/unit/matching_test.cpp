#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "keg/critical.hpp"
#include "keg/error.hpp"
#include "keg/fixtures.hpp"
#include "keg/graph_ops.hpp"
#include "keg/matching.hpp"
#include "keg/oracle.hpp"
#include "test_support.hpp"

using namespace keg;

TEST_CASE("maximum matching on fixtures") {
  CHECK(maximum_matching(fixture("G2")).size() == 3);
  CHECK(maximum_matching(fixture("GF10")).size() == 3);
  const Graph k6e = generate("complete_minus_edge", {6});
  const Matching m = maximum_matching(k6e);
  CHECK(m.size() == 3);
  CHECK(is_valid_matching(k6e, m));
  CHECK(maximum_matching(Graph(0)).size() == 0);
}

TEST_CASE("matching is deterministic") {
  const Graph g = fixture("H2");
  CHECK(maximum_matching(g) == maximum_matching(g));
}

TEST_CASE("blossoms: odd cycles and a flower") {
  CHECK(maximum_matching(generate("cycle", {5})).size() == 2);
  CHECK(maximum_matching(generate("cycle", {7})).size() == 3);
  // Triangle with a stem: greedy picks 0-1 first and must reroute through the blossom.
  const Graph flower = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {0, 4}, {1, 5}});
  CHECK(maximum_matching(flower).size() == 3);
  // Two triangles joined by a path: the augmenting path crosses both blossoms.
  const Graph posy = make_graph(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}, {1, 7}});
  CHECK(maximum_matching(posy).size() == 4);
}

TEST_CASE("bipartite matching") {
  const Graph c4 = generate("cycle", {4});
  CHECK(maximum_bipartite_matching(c4, VertexSet(4, {0, 2})).size() == 2);
  const Graph star = generate("star", {3});
  CHECK(maximum_bipartite_matching(star, VertexSet(4, {0})).size() == 1);
  const DoubleCover k3 = bipartite_double_cover(generate("complete", {3}));
  const Matching m = maximum_bipartite_matching(k3.graph, k3.left);
  CHECK(m.size() == 3);
  CHECK(is_valid_matching(k3.graph, m));

  try {
    maximum_bipartite_matching(generate("complete", {3}), VertexSet(3, {0}));
    FAIL("expected NotBipartite");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotBipartite);
  }
}

TEST_CASE("deficiency and perfect matchings") {
  CHECK(deficiency(fixture("GF10")) == 2);
  CHECK(deficiency(generate("cycle", {4})) == 0);
  CHECK(deficiency(generate("star", {3})) == 2);
  CHECK(has_perfect_matching(fixture("H1")));
  CHECK_FALSE(has_perfect_matching(fixture("H3")));
  CHECK(has_perfect_matching(Graph(0)));
}

TEST_CASE("saturating matchings") {
  const Graph gf10 = fixture("GF10");
  const auto r = saturating_matching(gf10, gf10.set_of({"b"}), gf10.set_of({"a", "h"}));
  REQUIRE(r);
  CHECK(r.matching->size() == 1);
  CHECK(r.matching->mate(*gf10.find_label("b")) == gf10.find_label("a"));

  const auto none = saturating_matching(gf10, gf10.empty_set(), gf10.set_of({"a"}));
  REQUIRE(none);
  CHECK(none.matching->empty());

  const Graph star = generate("star", {3});
  const auto fail = saturating_matching(star, VertexSet(4, {1, 2, 3}), VertexSet(4, {0}));
  CHECK_FALSE(fail);
  CHECK(fail.hall_violator == VertexSet(4, {1, 2, 3}));

  CHECK_THROWS_AS(saturating_matching(star, VertexSet(4, {0, 1}), VertexSet(4, {1})), Error);
}

TEST_CASE("maximum matching equals the oracle on 500 random graphs, n <= 14") {
  Rng rng(testing::seed() + 10);
  std::size_t compared = 0;
  for (const Graph& g : testing::fixtures()) {
    REQUIRE(maximum_matching(g).size() == oracle::brute_mu(g));
  }
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = rng() % 15;
    const Graph g = random_graph(n, 0.05 * static_cast<double>(1 + rng() % 8), rng);
    const Matching m = maximum_matching(g);
    REQUIRE(is_valid_matching(g, m));
    REQUIRE(m.saturated().size() == 2 * m.size());
    REQUIRE(matching_number(g, g.vertices()) == m.size());
    if (g.size() <= oracle::kMaxEdges) {
      REQUIRE(m.size() == oracle::brute_mu(g));
      ++compared;
    }
  }
  CHECK(compared >= 300);
}

TEST_CASE("bipartite and general matchings agree on 200 random bipartite graphs, n <= 40") {
  Rng rng(testing::seed() + 11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t a = rng() % 21;
    const std::size_t b = rng() % 21;
    const auto bg = random_bipartite(a, b, 0.05 * static_cast<double>(1 + rng() % 10), rng);
    const Matching hk = maximum_bipartite_matching(bg.graph, bg.left);
    REQUIRE(is_valid_matching(bg.graph, hk));
    REQUIRE(hk.size() == maximum_matching(bg.graph).size());
  }
}

TEST_CASE("saturating matching exists iff Hall's condition holds") {
  Rng rng(testing::seed() + 12);
  int absent = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 2 + rng() % 17;
    const Graph g = random_graph(n, 0.25, rng);
    VertexSet from(n), into(n);
    for (Vertex v = 0; v < n; ++v) {
      const auto side = rng() % 3;
      if (side == 0 && from.size() < 12) from.insert(v);
      if (side == 1) into.insert(v);
    }
    const auto r = saturating_matching(g, from, into);
    REQUIRE(static_cast<bool>(r) == oracle::brute_hall_condition(g, from, into));
    if (r) {
      REQUIRE(is_valid_matching(g, *r.matching));
      for (Vertex v : from) REQUIRE(into.contains(*r.matching->mate(v)));
    } else {
      ++absent;
      const VertexSet& w = r.hall_violator;
      REQUIRE(w.is_subset_of(from));
      REQUIRE((neighborhood(g, w) & into).size() < w.size());
    }
  }
  CHECK(absent > 20);
}
