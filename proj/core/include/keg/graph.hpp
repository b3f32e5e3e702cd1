#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keg/vertex_set.hpp"

namespace keg {

struct Edge {
  Vertex u;
  Vertex v;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: as per-vertex bitsets for the set-algebra kernels
/// and as ascending neighbor lists for traversal. Vertex labels are display
/// metadata only and never affect algorithms.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::span<const Vertex> neighbor_list(Vertex v) const { return lists_[v]; }
  std::size_t degree(Vertex v) const { return lists_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }

  /// All edges as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// The display label of v, or its decimal index when the graph is unlabeled.
  std::string label(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view label) const;
  /// Resolves display labels to a vertex set; throws Errc::UnknownVertex.
  VertexSet set_of(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(const VertexSet& s) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Adjacency and labels equal.
  bool operator==(const Graph& other) const;

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<Vertex>> lists_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

bool same_adjacency(const Graph& a, const Graph& b) noexcept;

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  /// Returns false when the edge was already present. Throws Errc::SelfLoop
  /// and Errc::UnknownVertex.
  bool add_edge(Vertex u, Vertex v);
  void set_labels(std::vector<std::string> labels);

  std::size_t order() const noexcept { return adjacency_.size(); }

  Graph build() &&;

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});
Graph make_graph(std::size_t n, std::initializer_list<Edge> edges, std::vector<std::string> labels = {});

}  // namespace keg
