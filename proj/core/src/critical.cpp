#include "keg/critical.hpp"

#include <string>

#include "detail/hopcroft_karp.hpp"
#include "keg/error.hpp"
#include "keg/graph_ops.hpp"

namespace keg {

DoubleCover bipartite_double_cover(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(2 * n);
  for (const auto& e : g.edges()) {
    b.add_edge(e.u, static_cast<Vertex>(n + e.v));
    b.add_edge(e.v, static_cast<Vertex>(n + e.u));
  }
  DoubleCover cover;
  cover.graph = std::move(b).build();
  cover.left = VertexSet(2 * n);
  for (Vertex v = 0; v < n; ++v) cover.left.insert(v);
  return cover;
}

std::int64_t critical_difference(const Graph& g, const VertexSet& within) {
  // Runs Hopcroft-Karp on the cover of G[within] directly: left and right
  // copies share the local index of each vertex.
  const std::vector<Vertex> members = within.to_vector();
  std::vector<std::uint32_t> local(g.order(), detail::HopcroftKarp::npos);
  for (std::uint32_t i = 0; i < members.size(); ++i) local[members[i]] = i;
  detail::HopcroftKarp hk(members.size(), members.size());
  for (std::uint32_t i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbor_list(members[i])) {
      if (local[w] != detail::HopcroftKarp::npos) hk.add_edge(i, local[w]);
    }
  }
  return static_cast<std::int64_t>(members.size()) - static_cast<std::int64_t>(hk.run());
}

std::int64_t critical_difference(const Graph& g) { return critical_difference(g, g.vertices()); }

bool is_critical(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && surplus(g, s) == critical_difference(g);
}

namespace {

Matching hall_matching_or_defect(const Graph& g, const VertexSet& s) {
  auto result = saturating_matching(g, neighborhood(g, s), s);
  if (!result) {
    throw Error(Errc::Defect, "critical set without a matching from its neighborhood");
  }
  return std::move(*result.matching);
}

}  // namespace

CriticalWitness max_critical_independent_set(const Graph& g) {
  const std::int64_t d = critical_difference(g);
  VertexSet residual = g.vertices();
  std::int64_t residual_d = d;
  VertexSet picked = g.empty_set();

  for (Vertex v = 0; v < g.order(); ++v) {
    if (!residual.contains(v)) continue;
    const VertexSet open = g.neighbors(v) & residual;
    VertexSet rest = residual - open;
    rest.erase(v);
    const std::int64_t rest_d = critical_difference(g, rest);
    if (1 - static_cast<std::int64_t>(open.size()) + rest_d == residual_d) {
      picked.insert(v);
      residual = std::move(rest);
      residual_d = rest_d;
    }
  }

  CriticalWitness w;
  w.value = surplus(g, picked);
  if (!is_independent(g, picked) || w.value != d) {
    throw Error(Errc::Defect, "critical-set construction produced surplus " + std::to_string(w.value) +
                                  ", expected " + std::to_string(d));
  }
  w.hall_matching = hall_matching_or_defect(g, picked);
  w.set = std::move(picked);
  return w;
}

Matching hall_certificate(const Graph& g, const VertexSet& s) {
  if (!is_critical(g, s)) throw Error(Errc::NotCritical, "set is not a critical independent set");
  return hall_matching_or_defect(g, s);
}

}  // namespace keg
