#include "keg/graph_ops.hpp"

#include <utility>

namespace keg {

VertexSet neighborhood(const Graph& g, const VertexSet& s, Neighborhood mode) {
  VertexSet out(g.order());
  for (Vertex v : s) out |= g.neighbors(v);
  if (mode == Neighborhood::closed) out |= s;
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

std::int64_t surplus(const Graph& g, const VertexSet& s) {
  return static_cast<std::int64_t>(s.size()) -
         static_cast<std::int64_t>(neighborhood(g, s).size());
}

VertexSet InducedSubgraph::lift(const VertexSet& sub) const {
  VertexSet out(from_original.size());
  for (Vertex v : sub) out.insert(to_original[v]);
  return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet& original) const {
  VertexSet out(to_original.size());
  for (Vertex v : original) {
    if (from_original[v] != npos) out.insert(from_original[v]);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.from_original.assign(g.order(), InducedSubgraph::npos);
  for (Vertex v : s) {
    out.from_original[v] = static_cast<Vertex>(out.to_original.size());
    out.to_original.push_back(v);
  }
  GraphBuilder b(out.to_original.size());
  for (Vertex nu = 0; nu < out.to_original.size(); ++nu) {
    for (Vertex w : g.neighbor_list(out.to_original[nu])) {
      const Vertex nw = out.from_original[w];
      if (nw != InducedSubgraph::npos && nu < nw) b.add_edge(nu, nw);
    }
  }
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(out.to_original.size());
    for (Vertex v : out.to_original) labels.push_back(g.label(v));
    b.set_labels(std::move(labels));
  }
  out.graph = std::move(b).build();
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& w) {
  return induced_subgraph(g, g.vertices() - w);
}

InducedSubgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s) {
  return delete_vertices(g, neighborhood(g, s, Neighborhood::closed));
}

}  // namespace keg
