#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "keg/graph.hpp"

namespace keg {

/// A set of pairwise non-incident vertex pairs over vertices 0..n-1.
///
/// Matching itself only enforces disjointness; whether each pair is an edge
/// of some host graph is checked by is_valid_matching.
class Matching {
 public:
  static constexpr Vertex npos = static_cast<Vertex>(-1);

  Matching() = default;
  explicit Matching(std::size_t n) : mate_(n, npos) {}

  std::size_t universe() const noexcept { return mate_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Throws std::invalid_argument if u or v is already matched or u == v.
  void add(Vertex u, Vertex v);
  void remove(Vertex u);

  bool is_matched(Vertex v) const { return mate_[v] != npos; }
  std::optional<Vertex> mate(Vertex v) const {
    if (mate_[v] == npos) return std::nullopt;
    return mate_[v];
  }

  /// Pairs (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;
  VertexSet saturated() const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Vertex> mate_;
  std::size_t size_ = 0;
};

/// Every pair is an edge of g and pairs are disjoint.
bool is_valid_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching in a general graph (Edmonds, blossom
/// contraction). Vertices and neighbors are scanned in ascending order, so the
/// result is a deterministic function of the graph.
Matching maximum_matching(const Graph& g);

/// mu(G[within]) without materializing the induced subgraph.
std::size_t matching_number(const Graph& g, const VertexSet& within);

/// Hopcroft-Karp on a bipartite graph whose side 0 is `left`. Throws
/// Errc::NotBipartite if some edge has both ends on one side.
Matching maximum_bipartite_matching(const Graph& g, const VertexSet& left);

/// n - 2 mu(G).
std::size_t deficiency(const Graph& g);
bool has_perfect_matching(const Graph& g);

struct SaturationResult {
  /// Present when every vertex of `from` could be matched into `into`.
  std::optional<Matching> matching;
  /// When matching is absent: W subset of from with |N(W) n into| < |W|.
  VertexSet hall_violator;

  explicit operator bool() const noexcept { return matching.has_value(); }
};

/// A matching that uses only from-into edges and saturates `from`, or a Hall
/// violator read off the alternating-reachability cut. Requires disjoint sets.
SaturationResult saturating_matching(const Graph& g, const VertexSet& from, const VertexSet& into);

}  // namespace keg
