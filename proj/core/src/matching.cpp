#include "keg/matching.hpp"

#include <stdexcept>
#include <string>

#include "detail/blossom.hpp"
#include "detail/hopcroft_karp.hpp"
#include "keg/error.hpp"

namespace keg {

void Matching::add(Vertex u, Vertex v) {
  if (u == v || u >= mate_.size() || v >= mate_.size() || mate_[u] != npos || mate_[v] != npos) {
    throw std::invalid_argument("Matching::add: pair is not disjoint from the matching");
  }
  mate_[u] = v;
  mate_[v] = u;
  ++size_;
}

void Matching::remove(Vertex u) {
  if (mate_[u] == npos) return;
  mate_[mate_[u]] = npos;
  mate_[u] = npos;
  --size_;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < mate_.size(); ++u) {
    if (mate_[u] != npos && u < mate_[u]) out.push_back({u, mate_[u]});
  }
  return out;
}

VertexSet Matching::saturated() const {
  VertexSet s(mate_.size());
  for (Vertex u = 0; u < mate_.size(); ++u) {
    if (mate_[u] != npos) s.insert(u);
  }
  return s;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  if (m.universe() != g.order()) return false;
  std::size_t pairs = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto w = m.mate(u);
    if (!w) continue;
    if (*w >= g.order() || m.mate(*w) != u || !g.has_edge(u, *w)) return false;
    if (u < *w) ++pairs;
  }
  return pairs == m.size() && m.saturated().size() == 2 * m.size();
}

Matching maximum_matching(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbor_list(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  const auto mate = detail::edmonds_matching(adj);
  Matching m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mate[v] > static_cast<std::int32_t>(v)) m.add(v, static_cast<Vertex>(mate[v]));
  }
  return m;
}

std::size_t matching_number(const Graph& g, const VertexSet& within) {
  std::vector<Vertex> local(g.order(), Matching::npos);
  std::vector<Vertex> members = within.to_vector();
  for (Vertex i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<std::vector<std::uint32_t>> adj(members.size());
  for (Vertex i = 0; i < members.size(); ++i) {
    for (Vertex w : g.neighbor_list(members[i])) {
      if (local[w] != Matching::npos) adj[i].push_back(local[w]);
    }
  }
  const auto mate = detail::edmonds_matching(adj);
  std::size_t matched = 0;
  for (auto m : mate) matched += m != -1 ? 1 : 0;
  return matched / 2;
}

Matching maximum_bipartite_matching(const Graph& g, const VertexSet& left) {
  if (left.universe() != g.order()) throw Error(Errc::BadParams, "side set universe mismatch");
  std::vector<std::uint32_t> side_index(g.order());
  std::vector<Vertex> lefts, rights;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (left.contains(v)) {
      side_index[v] = static_cast<std::uint32_t>(lefts.size());
      lefts.push_back(v);
    } else {
      side_index[v] = static_cast<std::uint32_t>(rights.size());
      rights.push_back(v);
    }
  }
  detail::HopcroftKarp hk(lefts.size(), rights.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbor_list(v)) {
      if (left.contains(v) == left.contains(w)) {
        throw Error(Errc::NotBipartite, "edge " + std::to_string(v) + "-" + std::to_string(w) +
                                            " lies within one side");
      }
      if (left.contains(v)) hk.add_edge(side_index[v], side_index[w]);
    }
  }
  hk.run();
  Matching m(g.order());
  for (std::uint32_t l = 0; l < lefts.size(); ++l) {
    if (hk.mate_left(l) != detail::HopcroftKarp::npos) m.add(lefts[l], rights[hk.mate_left(l)]);
  }
  return m;
}

std::size_t deficiency(const Graph& g) { return g.order() - 2 * maximum_matching(g).size(); }

bool has_perfect_matching(const Graph& g) { return deficiency(g) == 0; }

SaturationResult saturating_matching(const Graph& g, const VertexSet& from, const VertexSet& into) {
  if (from.intersects(into)) throw Error(Errc::BadParams, "saturating_matching: sides overlap");
  const std::vector<Vertex> lefts = from.to_vector();
  const std::vector<Vertex> rights = into.to_vector();
  std::vector<std::uint32_t> right_index(g.order(), detail::HopcroftKarp::npos);
  for (std::uint32_t i = 0; i < rights.size(); ++i) right_index[rights[i]] = i;

  detail::HopcroftKarp hk(lefts.size(), rights.size());
  for (std::uint32_t l = 0; l < lefts.size(); ++l) {
    for (Vertex w : g.neighbor_list(lefts[l])) {
      if (right_index[w] != detail::HopcroftKarp::npos) hk.add_edge(l, right_index[w]);
    }
  }
  SaturationResult result;
  result.hall_violator = VertexSet(g.order());
  if (hk.run() == lefts.size()) {
    Matching m(g.order());
    for (std::uint32_t l = 0; l < lefts.size(); ++l) m.add(lefts[l], rights[hk.mate_left(l)]);
    result.matching = std::move(m);
    return result;
  }
  // The alternating-reachable part W of `from` has every neighbor matched
  // back into W, and at least one vertex of W is exposed.
  const auto reach = hk.reachable_from_free_left();
  for (std::uint32_t l = 0; l < lefts.size(); ++l) {
    if (reach[l]) result.hall_violator.insert(lefts[l]);
  }
  return result;
}

}  // namespace keg
