#include "keg/fixtures.hpp"

#include <array>
#include <string>
#include <utility>

#include "keg/error.hpp"

namespace keg {

namespace {

struct NamedEdge {
  std::string_view a, b;
};

Graph labelled(std::initializer_list<std::string_view> names, std::initializer_list<NamedEdge> edges) {
  std::vector<std::string> labels(names.begin(), names.end());
  auto index = [&](std::string_view name) {
    for (Vertex v = 0; v < labels.size(); ++v) {
      if (labels[v] == name) return v;
    }
    throw Error(Errc::Defect, "fixture edge uses undeclared vertex " + std::string(name));
  };
  GraphBuilder b(labels.size());
  for (const auto& e : edges) b.add_edge(index(e.a), index(e.b));
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

// Edge lists transcribed from the drawings; see data/fixtures/*.edges.
Graph make_g2() {
  const std::array<std::string_view, 6> clique = {"p", "q1", "q2", "q3", "q4", "v"};
  std::vector<std::string> labels = {"p", "q1", "q2", "q3", "q4", "v", "x", "y", "z"};
  GraphBuilder b(labels.size());
  for (Vertex i = 0; i < clique.size(); ++i) {
    for (Vertex j = i + 1; j < clique.size(); ++j) b.add_edge(i, j);
  }
  for (Vertex leaf : {6U, 7U, 8U}) b.add_edge(5, leaf);
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

constexpr std::array<std::string_view, 6> kFixtureNames = {"H1", "H2", "H3", "G1", "G2", "GF10"};
constexpr std::array<std::string_view, 7> kFamilyNames = {
    "path", "cycle", "complete", "complete_minus_edge", "star", "complete_bipartite", "empty"};

void require_params(std::string_view family, std::span<const std::size_t> params, std::size_t count) {
  if (params.size() != count) {
    throw Error(Errc::BadParams, std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
  }
}

bool coin(Rng& rng, double p) {
  // Threshold on the raw 64-bit draw keeps the stream identical across
  // standard libraries (distribution objects are implementation-defined).
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const double scaled = p * 18446744073709551616.0;
  if (scaled >= 18446744073709551615.0) return true;
  return rng() < static_cast<std::uint64_t>(scaled);
}

}  // namespace

Graph fixture(std::string_view name) {
  if (name == "H1") return labelled({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
  if (name == "H2") {
    return labelled({"a1", "a2", "a3", "a4", "b1", "b2", "b3"},
                    {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"b1", "b2"},
                     {"a1", "b1"}, {"a3", "b2"}, {"a3", "b3"}});
  }
  if (name == "H3") {
    return labelled({"c1", "c2", "c3", "d1", "d2"},
                    {{"c1", "c2"}, {"c2", "c3"}, {"c1", "d1"}, {"c2", "d2"}, {"c3", "d2"}});
  }
  if (name == "G1") {
    return labelled({"a", "b", "c", "d", "e", "f", "g", "h", "u"},
                    {{"a", "c"}, {"c", "b"}, {"c", "d"}, {"c", "u"}, {"d", "e"},
                     {"e", "f"}, {"e", "g"}, {"e", "h"}, {"u", "h"}});
  }
  if (name == "G2") return make_g2();
  if (name == "GF10") {
    return labelled({"a", "b", "c", "d", "e", "f", "g", "h"},
                    {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "g"},
                     {"b", "h"}, {"c", "e"}, {"e", "f"}, {"f", "g"}});
  }
  throw Error(Errc::UnknownName, "no fixture named '" + std::string(name) + "'");
}

std::span<const std::string_view> fixture_names() { return kFixtureNames; }
std::span<const std::string_view> family_names() { return kFamilyNames; }

Graph generate(std::string_view family, std::span<const std::size_t> params) {
  if (family == "path") {
    require_params(family, params, 1);
    GraphBuilder b(params[0]);
    for (Vertex v = 1; v < params[0]; ++v) b.add_edge(v - 1, v);
    return std::move(b).build();
  }
  if (family == "cycle") {
    require_params(family, params, 1);
    if (params[0] < 3) throw Error(Errc::BadParams, "cycle needs n >= 3");
    GraphBuilder b(params[0]);
    for (Vertex v = 0; v < params[0]; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % params[0]));
    return std::move(b).build();
  }
  if (family == "complete" || family == "complete_minus_edge") {
    require_params(family, params, 1);
    const bool minus = family == "complete_minus_edge";
    if (minus && params[0] < 2) throw Error(Errc::BadParams, "complete_minus_edge needs n >= 2");
    GraphBuilder b(params[0]);
    for (Vertex u = 0; u < params[0]; ++u) {
      for (Vertex v = u + 1; v < params[0]; ++v) {
        if (!(minus && u == 0 && v == 1)) b.add_edge(u, v);
      }
    }
    return std::move(b).build();
  }
  if (family == "star") {
    require_params(family, params, 1);
    GraphBuilder b(params[0] + 1);
    for (Vertex v = 1; v <= params[0]; ++v) b.add_edge(0, v);
    return std::move(b).build();
  }
  if (family == "complete_bipartite") {
    require_params(family, params, 2);
    const std::size_t a = params[0];
    GraphBuilder b(a + params[1]);
    for (Vertex u = 0; u < a; ++u) {
      for (Vertex v = static_cast<Vertex>(a); v < a + params[1]; ++v) b.add_edge(u, v);
    }
    return std::move(b).build();
  }
  if (family == "empty") {
    require_params(family, params, 1);
    return Graph(params[0]);
  }
  throw Error(Errc::UnknownName, "no graph family named '" + std::string(family) + "'");
}

Graph generate(std::string_view family, std::initializer_list<std::size_t> params) {
  return generate(family, std::span<const std::size_t>(params.begin(), params.size()));
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (coin(rng, p)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

BipartiteGraph random_bipartite(std::size_t a, std::size_t b, double p, Rng& rng) {
  GraphBuilder builder(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = static_cast<Vertex>(a); v < a + b; ++v) {
      if (coin(rng, p)) builder.add_edge(u, v);
    }
  }
  VertexSet left(a + b);
  for (Vertex u = 0; u < a; ++u) left.insert(u);
  return {std::move(builder).build(), std::move(left)};
}

}  // namespace keg
