#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "keg/error.hpp"
#include "keg/fixtures.hpp"
#include "keg/graph_ops.hpp"
#include "keg/independence.hpp"
#include "keg/oracle.hpp"
#include "test_support.hpp"

using namespace keg;

namespace {

std::vector<std::vector<std::string>> labelled(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(g.labels_of(s));
  return out;
}

// Random maximal-by-chance independent set: shuffled greedy, stopped early.
VertexSet random_independent(const Graph& g, Rng& rng) {
  std::vector<Vertex> order = g.vertices().to_vector();
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t stop = order.empty() ? 0 : 1 + rng() % order.size();
  VertexSet s = g.empty_set();
  for (Vertex v : order) {
    if (s.size() >= stop) break;
    if (!g.neighbors(v).intersects(s)) s.insert(v);
  }
  return s;
}

}  // namespace

TEST_CASE("alpha on fixtures") {
  CHECK(alpha(fixture("G2")).size == 4);
  CHECK(alpha(fixture("GF10")).size == 4);
  const auto k1 = alpha(Graph(1));
  CHECK(k1.size == 1);
  CHECK(k1.witness == VertexSet(1, {0}));
  CHECK(alpha(Graph(0)).size == 0);
}

TEST_CASE("alpha witness is the lexicographically smallest maximizer") {
  const Graph h1 = fixture("H1");
  CHECK(h1.labels_of(alpha(h1).witness) == std::vector<std::string>{"1", "3"});
  Rng rng(testing::seed() + 20);
  for (const Graph& g : testing::random_pool(200, 0, 12, rng)) {
    const auto all = oracle::brute_maximum_independent_sets(g);
    REQUIRE(alpha(g).witness == all.front());
  }
}

TEST_CASE("exact solver gate") {
  const Graph big(65);
  try {
    alpha(big);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  CHECK(alpha(big, {.max_vertices = 64, .force = true}).size == 65);
  CHECK_THROWS_AS(core(big), Error);
  CHECK_THROWS_AS(enumerate_maximum_independent_sets(big), Error);
}

TEST_CASE("maximum independent set enumeration") {
  const Graph h1 = fixture("H1");
  CHECK(labelled(h1, collect_maximum_independent_sets(h1).sets) ==
        std::vector<std::vector<std::string>>{{"1", "3"}, {"1", "4"}});

  const auto k3 = collect_maximum_independent_sets(generate("complete", {3}));
  CHECK(k3.sets == std::vector<VertexSet>{VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})});
  CHECK_FALSE(k3.truncated);

  const Graph gf10 = fixture("GF10");
  const auto gf = collect_maximum_independent_sets(gf10);
  CHECK(gf.sets.size() == 5);
  for (const auto& s : gf.sets) CHECK(gf10.set_of({"a", "h"}).is_subset_of(s));

  const auto empty = collect_maximum_independent_sets(Graph(0));
  CHECK(empty.sets == std::vector<VertexSet>{VertexSet(0)});
}

TEST_CASE("enumeration truncation is reported") {
  const Graph iso = generate("complete_bipartite", {3, 3});
  auto capped = collect_maximum_independent_sets(iso, 1);
  CHECK(capped.sets.size() == 1);
  CHECK(capped.truncated);
  auto exact = collect_maximum_independent_sets(iso, 2);
  CHECK(exact.sets.size() == 2);
  CHECK_FALSE(exact.truncated);

  auto stream = enumerate_maximum_independent_sets(generate("empty", {0}), 0);
  CHECK_FALSE(stream.next());
  CHECK(stream.truncated());
}

TEST_CASE("core") {
  const Graph gf10 = fixture("GF10");
  CHECK(core(gf10) == gf10.set_of({"a", "h"}));
  const Graph g2 = fixture("G2");
  CHECK(core(g2) == g2.set_of({"x", "y", "z"}));
  CHECK(core(generate("complete", {3})).empty());
  const Graph g1 = fixture("G1");
  CHECK(core(g1) == g1.set_of({"a", "b", "d", "f", "g"}));
}

TEST_CASE("local maximum independent sets") {
  const Graph g1 = fixture("G1");
  CHECK(is_local_max_independent_set(g1, g1.set_of({"d", "h"})));
  CHECK(is_local_max_independent_set(generate("complete", {3}), VertexSet(3, {0})));
  const Graph gf10 = fixture("GF10");
  CHECK_FALSE(is_local_max_independent_set(gf10, gf10.set_of({"e"})));
  try {
    is_local_max_independent_set(gf10, gf10.set_of({"a", "b"}));
    FAIL("expected NotIndependent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotIndependent);
  }
}

TEST_CASE("extension to a maximum independent set") {
  const Graph g1 = fixture("G1");
  CHECK(extends_to_maximum(g1, g1.set_of({"d", "h"})));
  const Graph gf10 = fixture("GF10");
  CHECK(extends_to_maximum(gf10, gf10.set_of({"a", "h"})));
  CHECK_FALSE(extends_to_maximum(generate("complete_minus_edge", {6}), VertexSet(6, {2})));
  CHECK(extends_to_maximum(generate("complete_minus_edge", {6}), VertexSet(6, {0})));
  CHECK_THROWS_AS(extends_to_maximum(gf10, gf10.set_of({"c", "d"})), Error);
}

TEST_CASE("alpha agrees with the oracle on fixtures and 500 random graphs, n <= 16") {
  for (const Graph& g : testing::fixtures()) REQUIRE(alpha(g).size == oracle::brute_alpha(g));
  Rng rng(testing::seed() + 21);
  for (const Graph& g : testing::random_pool(500, 0, 16, rng)) {
    const auto a = alpha(g);
    REQUIRE(a.size == oracle::brute_alpha(g));
    REQUIRE(is_independent(g, a.witness));
    REQUIRE(a.witness.size() == a.size);
  }
}

TEST_CASE("enumeration and core properties") {
  Rng rng(testing::seed() + 22);
  auto pool = testing::random_pool(300, 0, 12, rng);
  for (const Graph& f : testing::fixtures()) pool.push_back(f);
  for (const Graph& g : pool) {
    const auto omega = collect_maximum_independent_sets(g);
    REQUIRE_FALSE(omega.truncated);
    const std::size_t a = alpha(g).size;
    VertexSet meet = g.vertices();
    for (const auto& s : omega.sets) {
      REQUIRE(s.size() == a);
      REQUIRE(is_independent(g, s));
      meet &= s;
    }
    REQUIRE(std::is_sorted(omega.sets.begin(), omega.sets.end(), lex_less));
    REQUIRE(std::adjacent_find(omega.sets.begin(), omega.sets.end()) == omega.sets.end());
    REQUIRE(omega.sets == oracle::brute_maximum_independent_sets(g));
    REQUIRE(core(g) == meet);
    REQUIRE(is_independent(g, meet));
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::size_t without = alpha(delete_vertices(g, VertexSet(g.order(), {v})).graph).size;
      REQUIRE(without <= a);
      REQUIRE(without + 1 >= a);
    }
  }
}

TEST_CASE("local maximum independent sets extend to maximum ones") {
  Rng rng(testing::seed() + 23);
  std::size_t sampled = 0;
  for (int attempt = 0; attempt < 20000 && sampled < 200; ++attempt) {
    const Graph g = random_graph(2 + rng() % 15, 0.1 * static_cast<double>(1 + rng() % 6), rng);
    const VertexSet a = random_independent(g, rng);
    const bool local = is_local_max_independent_set(g, a);
    REQUIRE(local == oracle::brute_is_local_max(g, a));
    if (!local) continue;
    ++sampled;
    REQUIRE(extends_to_maximum(g, a));
  }
  CHECK(sampled == 200);
}

TEST_CASE("bipartite graphs of moderate size solve quickly") {
  Rng rng(testing::seed() + 24);
  for (int i = 0; i < 20; ++i) {
    const auto bg = random_bipartite(20, 20, 0.1, rng);
    const auto a = alpha(bg.graph);
    CHECK(a.size >= 20);
    CHECK(is_independent(bg.graph, a.witness));
  }
}
