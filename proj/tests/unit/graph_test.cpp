#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "keg/error.hpp"
#include "keg/fixtures.hpp"
#include "keg/formats.hpp"
#include "keg/graph_ops.hpp"
#include "test_support.hpp"

using namespace keg;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected keg::Error");
  return Errc::Defect;
}

bool well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.has_edge(v, v)) return false;
    for (Vertex w : g.neighbor_list(v)) {
      if (!g.has_edge(w, v)) return false;
    }
    degree_sum += g.degree(v);
  }
  return degree_sum == 2 * g.size();
}

}  // namespace

TEST_CASE("vertex sets behave as sets") {
  VertexSet a(130, {0, 5, 64, 129});
  VertexSet b(130, {5, 64, 100});
  CHECK(a.size() == 4);
  CHECK((a & b) == VertexSet(130, {5, 64}));
  CHECK((a | b).size() == 5);
  CHECK((a - b) == VertexSet(130, {0, 129}));
  CHECK(a.complement().size() == 126);
  CHECK(VertexSet::full(130).complement().empty());
  CHECK(a.to_vector() == std::vector<Vertex>{0, 5, 64, 129});
  CHECK(a.find_next(6) == 64);
  CHECK(a.find_next(130) == 130);

  CHECK(lex_less(VertexSet(6, {0, 3}), VertexSet(6, {0, 4})));
  CHECK(lex_less(VertexSet(6, {0}), VertexSet(6, {0, 4})));
  CHECK_FALSE(lex_less(VertexSet(6, {0, 4}), VertexSet(6, {0})));
  CHECK(lex_less(VertexSet(6, {1, 5}), VertexSet(6, {2})));
  CHECK_FALSE(lex_less(VertexSet(6, {2}), VertexSet(6, {2})));
}

TEST_CASE("graph6 decodes the hand-encoded records") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.has_edge(0, 1));
  CHECK_FALSE(k2.has_labels());

  const Graph two = parse_graph6("A?");
  CHECK(two.order() == 2);
  CHECK(two.size() == 0);

  const Graph k3 = parse_graph6("Bw");
  CHECK(same_adjacency(k3, generate("complete", {3})));
}

TEST_CASE("graph6 emits canonical records") {
  CHECK(emit_graph6(generate("complete", {2})) == "A_");
  CHECK(emit_graph6(Graph(0)) == "?");
  CHECK(emit_graph6(generate("complete", {3})) == "Bw");
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 accepts header and one line break") {
  CHECK(parse_graph6(">>graph6<<Bw").size() == 3);
  CHECK(parse_graph6("Bw\n").size() == 3);
  CHECK(parse_graph6("Bw\r\n").size() == 3);
}

TEST_CASE("graph6 uses the 18-bit size prefix from n = 63") {
  Rng rng(testing::seed());
  for (std::size_t n : {62U, 63U, 100U, 200U}) {
    const Graph g = random_graph(n, 0.3, rng);
    const std::string text = emit_graph6(g);
    CHECK((text[0] == '~') == (n >= 63));
    if (n >= 63) CHECK(text.size() == 4 + (n * (n - 1) / 2 + 5) / 6);
    CHECK(same_adjacency(parse_graph6(text), g));
  }
}

TEST_CASE("graph6 errors") {
  CHECK(code_of([] { parse_graph6("B w"); }) == Errc::InvalidChar);
  CHECK(code_of([] { parse_graph6("B"); }) == Errc::Truncated);
  CHECK(code_of([] { parse_graph6(""); }) == Errc::Truncated);
  CHECK(code_of([] { parse_graph6("Dq"); }) == Errc::Truncated);
  CHECK(code_of([] { parse_graph6("Bww"); }) == Errc::TrailingData);
  CHECK(code_of([] { parse_graph6("A_\n\n"); }) == Errc::InvalidChar);
  CHECK(code_of([] { parse_graph6("~?"); }) == Errc::Truncated);
  // 36-bit prefix for n = 2^30 stops at the limit before reading a body.
  CHECK(code_of([] { parse_graph6("~~??~???"); }) == Errc::NOverflow);
  CHECK(code_of([] { parse_graph6("Bw", {.max_vertices = 2}); }) == Errc::NOverflow);
}

TEST_CASE("graph6 round-trips 1000 random graphs with n <= 60") {
  Rng rng(testing::seed());
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng() % 61;
    const Graph g = random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng);
    REQUIRE(well_formed(g));
    const Graph back = parse_graph6(emit_graph6(g));
    REQUIRE(well_formed(back));
    REQUIRE(same_adjacency(back, g));
  }
}

TEST_CASE("edge lists") {
  SUBCASE("indices") {
    const auto r = parse_edge_list("0 1\n1 2");
    CHECK(same_adjacency(r.graph, generate("path", {3})));
    CHECK_FALSE(r.had_duplicates());
    CHECK_FALSE(r.graph.has_labels());
  }
  SUBCASE("fixture files") {
    for (auto name : fixture_names()) {
      const auto r = parse_edge_list(testing::read_data("fixtures/" + std::string(name) + ".edges"));
      CHECK_MESSAGE(r.graph == fixture(name), name);
    }
    const auto h3 = parse_edge_list(testing::read_data("fixtures/H3.edges")).graph;
    CHECK(h3.order() == 5);
    CHECK(h3.size() == 5);
  }
  SUBCASE("labels in order of appearance, comments, isolated vertices") {
    const auto r = parse_edge_list("# demo\nvertices: x y z w\nx y # first\n\ny z\n");
    CHECK(r.graph.order() == 4);
    CHECK(r.graph.degree(3) == 0);
    CHECK(r.graph.label(3) == "w");
    const auto free_form = parse_edge_list("b a\na c\n");
    CHECK(free_form.graph.labels() == std::vector<std::string>{"b", "a", "c"});
  }
  SUBCASE("duplicates are collapsed and flagged") {
    const auto r = parse_edge_list("0 1\n1 0\n0 1\n");
    CHECK(r.graph.size() == 1);
    CHECK(r.duplicate_edges == 2);
  }
  SUBCASE("errors") {
    CHECK(code_of([] { parse_edge_list("0 0"); }) == Errc::SelfLoop);
    CHECK(code_of([] { parse_edge_list("vertices: 3\n0 3"); }) == Errc::UnknownVertex);
    CHECK(code_of([] { parse_edge_list("vertices: a b\na c"); }) == Errc::UnknownVertex);
    CHECK(code_of([] { parse_edge_list("0 1 2"); }) == Errc::Malformed);
    CHECK(code_of([] { parse_edge_list("0 1\nvertices: 2"); }) == Errc::Malformed);
  }
  SUBCASE("emit then parse") {
    const Graph g = fixture("G2");
    CHECK(parse_edge_list(emit_edge_list(g)).graph == g);
    const Graph c = generate("cycle", {5});
    CHECK(parse_edge_list(emit_edge_list(c)).graph == c);
  }
}

TEST_CASE("neighborhoods") {
  const Graph gf10 = fixture("GF10");
  CHECK(neighborhood(gf10, gf10.set_of({"a", "h"})) == gf10.set_of({"b"}));
  CHECK(neighborhood(gf10, gf10.empty_set()).empty());

  const Graph iso(3);
  CHECK(neighborhood(iso, VertexSet(3, {1}), Neighborhood::closed) == VertexSet(3, {1}));

  const Graph k3 = generate("complete", {3});
  // Not independent: N(s) meets s.
  CHECK(neighborhood(k3, VertexSet(3, {0, 1})) == VertexSet::full(3));
}

TEST_CASE("induced subgraphs and deletions") {
  const Graph h1 = fixture("H1");
  const auto tri = induced_subgraph(h1, h1.set_of({"2", "3", "4"}));
  CHECK(same_adjacency(tri.graph, generate("complete", {3})));
  CHECK(tri.graph.labels() == std::vector<std::string>{"2", "3", "4"});
  CHECK(tri.to_original == std::vector<Vertex>{1, 2, 3});
  CHECK(tri.from_original[0] == InducedSubgraph::npos);

  const auto whole = induced_subgraph(h1, h1.vertices());
  CHECK(whole.graph == h1);
  CHECK(whole.to_original == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(induced_subgraph(h1, h1.empty_set()).graph.order() == 0);

  const auto rest = delete_closed_neighborhood(h1, h1.set_of({"1"}));
  CHECK(rest.graph.labels() == std::vector<std::string>{"3", "4"});
  CHECK(rest.graph.size() == 1);

  const Graph star = generate("star", {3});
  CHECK(delete_closed_neighborhood(star, VertexSet(4, {1, 2, 3})).graph.order() == 0);
  CHECK(delete_closed_neighborhood(star, star.empty_set()).graph == star);
}

TEST_CASE("independence test") {
  const Graph g2 = fixture("G2");
  CHECK(is_independent(g2, g2.set_of({"x", "y", "z"})));
  CHECK(is_independent(g2, g2.empty_set()));
  CHECK_FALSE(is_independent(generate("complete", {2}), VertexSet::full(2)));
}

TEST_CASE("fixtures and families") {
  const Graph g2 = fixture("G2");
  CHECK(g2.order() == 9);
  CHECK(g2.size() == 18);
  for (auto name : fixture_names()) CHECK(well_formed(fixture(name)));

  const Graph k6e = generate("complete_minus_edge", {6});
  CHECK(k6e.size() == 14);
  CHECK_FALSE(k6e.has_edge(0, 1));
  CHECK(generate("cycle", {4}).size() == 4);
  CHECK(generate("complete_bipartite", {2, 3}).size() == 6);
  CHECK(generate("empty", {0}).order() == 0);
  CHECK(generate("path", {1}).size() == 0);

  CHECK(code_of([] { generate("complete_minus_edge", {1}); }) == Errc::BadParams);
  CHECK(code_of([] { generate("cycle", {2}); }) == Errc::BadParams);
  CHECK(code_of([] { generate("cycle", {}); }) == Errc::BadParams);
  CHECK(code_of([] { generate("wheel", {5}); }) == Errc::UnknownName);
  CHECK(code_of([] { fixture("G9"); }) == Errc::UnknownName);
  CHECK(code_of([] { fixture("GF10").set_of({"q"}); }) == Errc::UnknownVertex);
}

TEST_CASE("neighborhood and deletion invariants on random graphs") {
  Rng rng(testing::seed() + 1);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(rng() % 30, 0.2, rng);
    REQUIRE(well_formed(g));
    VertexSet s(g.order());
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (rng() % 3 == 0) {
        s.insert(v);
        degree_sum += g.degree(v);
      }
    }
    const VertexSet open = neighborhood(g, s);
    const VertexSet closed = neighborhood(g, s, Neighborhood::closed);
    CHECK(closed == (s | open));
    CHECK(open.size() <= degree_sum);
    CHECK(delete_closed_neighborhood(g, s).graph.order() == g.order() - closed.size());
  }
}
