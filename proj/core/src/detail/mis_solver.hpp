#pragma once

#include <cstddef>

#include "keg/graph.hpp"

namespace keg::detail {

/// Exact maximum independent set on induced subgraphs of one host graph.
///
/// Branches on a maximum-degree candidate (lowest index on ties) after taking
/// isolated and pendant vertices. Upper bound: greedy clique cover, tightened
/// by n - mu when the cover fails to prune.
class MisSolver {
 public:
  explicit MisSolver(const Graph& g) : g_(g) {}

  std::size_t maximum(const VertexSet& candidates);
  /// Stops at the first independent set of size k.
  bool at_least(const VertexSet& candidates, std::size_t k);

 private:
  void search(VertexSet candidates, std::size_t chosen);
  std::size_t clique_cover_bound(const VertexSet& candidates) const;
  std::size_t greedy_lower_bound(const VertexSet& candidates) const;

  const Graph& g_;
  std::size_t best_ = 0;
  std::size_t stop_at_ = 0;
  bool done_ = false;
};

}  // namespace keg::detail
