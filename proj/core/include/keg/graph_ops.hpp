#pragma once

#include <cstdint>
#include <vector>

#include "keg/graph.hpp"

namespace keg {

enum class Neighborhood { open, closed };

/// N(s) for open, N[s] = s u N(s) for closed. N(s) may meet s when s is not
/// independent.
VertexSet neighborhood(const Graph& g, const VertexSet& s, Neighborhood mode = Neighborhood::open);

bool is_independent(const Graph& g, const VertexSet& s);

/// |s| - |N(s)|.
std::int64_t surplus(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  static constexpr Vertex npos = static_cast<Vertex>(-1);

  Graph graph;
  std::vector<Vertex> to_original;    // new index -> old index
  std::vector<Vertex> from_original;  // old index -> new index or npos

  VertexSet lift(const VertexSet& sub) const;
  VertexSet restrict(const VertexSet& original) const;
};

/// G[s], re-indexed densely in ascending order of original index. Labels of
/// kept vertices carry over.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - w.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& w);

/// G - N[s].
InducedSubgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s);

}  // namespace keg
