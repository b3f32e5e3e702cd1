#include "keg/graph.hpp"

#include <utility>

#include "keg/error.hpp"

namespace keg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidChar: return "InvalidChar";
    case Errc::Truncated: return "Truncated";
    case Errc::TrailingData: return "TrailingData";
    case Errc::NOverflow: return "NOverflow";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::Malformed: return "Malformed";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParams: return "BadParams";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotIndependent: return "NotIndependent";
    case Errc::NotCritical: return "NotCritical";
    case Errc::NotKE: return "NotKE";
    case Errc::EnumerationTruncated: return "EnumerationTruncated";
    case Errc::Defect: return "Defect";
  }
  return "Unknown";
}

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)), lists_(n) {}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : lists_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  if (labels_.empty()) {
    Vertex value = 0;
    if (label.empty()) return std::nullopt;
    for (char c : label) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<Vertex>(c - '0');
      if (value >= order()) return std::nullopt;
    }
    return value;
  }
  return std::nullopt;
}

VertexSet Graph::set_of(std::initializer_list<std::string_view> labels) const {
  VertexSet s(order());
  for (auto name : labels) {
    auto v = find_label(name);
    if (!v) throw Error(Errc::UnknownVertex, "no vertex labelled '" + std::string(name) + "'");
    s.insert(*v);
  }
  return s;
}

std::vector<std::string> Graph::labels_of(const VertexSet& s) const {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(label(v));
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return same_adjacency(*this, other) && labels_ == other.labels_;
}

bool same_adjacency(const Graph& a, const Graph& b) noexcept {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (Vertex v = 0; v < a.order(); ++v) {
    if (!(a.neighbors(v) == b.neighbors(v))) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(std::size_t n) : adjacency_(n, VertexSet(n)) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) {
    throw Error(Errc::UnknownVertex, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                         " outside vertex range " + std::to_string(order()));
  }
  if (u == v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].contains(v)) return false;
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  return true;
}

void GraphBuilder::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order()) {
    throw Error(Errc::BadParams, "label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.adjacency_ = std::move(adjacency_);
  g.labels_ = std::move(labels_);
  g.lists_.resize(g.adjacency_.size());
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.adjacency_.size(); ++v) {
    g.lists_[v] = g.adjacency_[v].to_vector();
    degree_sum += g.lists_[v].size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  b.set_labels(std::move(labels));
  return std::move(b).build();
}

Graph make_graph(std::size_t n, std::initializer_list<Edge> edges, std::vector<std::string> labels) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels));
}

}  // namespace keg
