#include "keg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "keg/error.hpp"

namespace keg::oracle {

namespace {

using Mask = std::uint32_t;

struct Tables {
  std::size_t n = 0;
  std::vector<Mask> adj;
  std::vector<Mask> nbr;     // nbr[S] = N(S)
  std::vector<bool> indep;   // indep[S]
};

void require_small(const Graph& g, std::size_t limit = kMaxVertices) {
  if (g.order() > limit) {
    throw Error(Errc::TooLarge, "oracle needs n <= " + std::to_string(limit) + ", got " +
                                    std::to_string(g.order()));
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (u != v && g.has_edge(u, v)) adj[u] |= Mask{1} << v;
    }
  }
  return adj;
}

Tables tables(const Graph& g) {
  require_small(g);
  Tables t;
  t.n = g.order();
  t.adj = adjacency_masks(g);
  const std::size_t total = std::size_t{1} << t.n;
  t.nbr.assign(total, 0);
  t.indep.assign(total, true);
  for (std::size_t s = 1; s < total; ++s) {
    const Mask m = static_cast<Mask>(s);
    const int low = std::countr_zero(m);
    const Mask rest = m & (m - 1);
    t.nbr[s] = t.nbr[rest] | t.adj[low];
    t.indep[s] = t.indep[rest] && (t.adj[low] & rest) == 0;
  }
  return t;
}

int count(Mask m) { return std::popcount(m); }

VertexSet to_set(std::size_t n, Mask m) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if ((m >> v) & 1U) s.insert(v);
  }
  return s;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v = 0; v < s.universe(); ++v) {
    if (s.contains(v)) m |= Mask{1} << v;
  }
  return m;
}

// Ascending-sequence lexicographic order on masks.
bool mask_lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const Mask low = diff & (~diff + 1);
  const Mask above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

std::size_t mu_search(const std::vector<Edge>& edges, std::size_t next, Mask used, std::size_t size,
                      std::size_t& best) {
  if (size > best) best = size;
  if (size + (edges.size() - next) <= best) return best;
  for (std::size_t i = next; i < edges.size(); ++i) {
    const Mask ends = (Mask{1} << edges[i].u) | (Mask{1} << edges[i].v);
    if (used & ends) continue;
    mu_search(edges, i + 1, used | ends, size + 1, best);
  }
  return best;
}

}  // namespace

std::size_t brute_alpha(const Graph& g) {
  const Tables t = tables(g);
  int best = 0;
  for (std::size_t s = 0; s < t.indep.size(); ++s) {
    if (t.indep[s]) best = std::max(best, count(static_cast<Mask>(s)));
  }
  return static_cast<std::size_t>(best);
}

std::size_t brute_mu(const Graph& g, std::size_t max_edges) {
  require_small(g, 32);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  if (edges.size() > max_edges) {
    throw Error(Errc::TooLarge, "oracle needs m <= " + std::to_string(max_edges) + ", got " +
                                    std::to_string(edges.size()));
  }
  std::size_t best = 0;
  return mu_search(edges, 0, 0, 0, best);
}

std::int64_t brute_critical_difference(const Graph& g, SubsetFamily family) {
  const Tables t = tables(g);
  std::int64_t best = 0;  // the empty set
  for (std::size_t s = 0; s < t.indep.size(); ++s) {
    if (family == SubsetFamily::independent_only && !t.indep[s]) continue;
    best = std::max<std::int64_t>(best, count(static_cast<Mask>(s)) - count(t.nbr[s]));
  }
  return best;
}

AlphaC brute_alpha_c(const Graph& g) {
  const Tables t = tables(g);
  const std::int64_t d = brute_critical_difference(g, SubsetFamily::independent_only);
  Mask best = 0;
  for (std::size_t s = 0; s < t.indep.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    if (!t.indep[s] || count(m) - count(t.nbr[s]) != d) continue;
    if (count(m) > count(best) || (count(m) == count(best) && mask_lex_less(m, best))) best = m;
  }
  return {static_cast<std::size_t>(count(best)), to_set(t.n, best)};
}

std::vector<VertexSet> brute_maximum_independent_sets(const Graph& g) {
  const Tables t = tables(g);
  const auto a = static_cast<int>(brute_alpha(g));
  std::vector<Mask> found;
  for (std::size_t s = 0; s < t.indep.size(); ++s) {
    if (t.indep[s] && count(static_cast<Mask>(s)) == a) found.push_back(static_cast<Mask>(s));
  }
  std::sort(found.begin(), found.end(), mask_lex_less);
  std::vector<VertexSet> out;
  for (Mask m : found) out.push_back(to_set(t.n, m));
  return out;
}

VertexSet brute_core(const Graph& g) {
  const auto all = brute_maximum_independent_sets(g);
  VertexSet c = VertexSet::full(g.order());
  for (const auto& s : all) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!s.contains(v)) c.erase(v);
    }
  }
  return c;
}

std::vector<VertexSet> brute_critical_independent_sets(const Graph& g) {
  const Tables t = tables(g);
  const std::int64_t d = brute_critical_difference(g, SubsetFamily::independent_only);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < t.indep.size(); ++s) {
    const Mask m = static_cast<Mask>(s);
    if (t.indep[s] && count(m) - count(t.nbr[s]) == d) out.push_back(to_set(t.n, m));
  }
  return out;
}

bool brute_hall_condition(const Graph& g, const VertexSet& from, const VertexSet& into) {
  require_small(g, 32);
  const auto adj = adjacency_masks(g);
  std::vector<Vertex> left;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (from.contains(v)) left.push_back(v);
  }
  if (left.size() > kMaxVertices) throw Error(Errc::TooLarge, "oracle Hall check needs |from| <= 20");
  const Mask target = to_mask(into);
  for (Mask w = 1; w < (Mask{1} << left.size()); ++w) {
    Mask reach = 0;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if ((w >> i) & 1U) reach |= adj[left[i]];
    }
    if (count(reach & target) < count(w)) return false;
  }
  return true;
}

bool brute_is_local_max(const Graph& g, const VertexSet& a) {
  require_small(g, 32);
  const auto adj = adjacency_masks(g);
  const Mask am = to_mask(a);
  Mask closed = am;
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((am >> v) & 1U) closed |= adj[v];
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((closed >> v) & 1U) members.push_back(v);
  }
  if (members.size() > kMaxVertices) throw Error(Errc::TooLarge, "oracle local check needs |N[a]| <= 20");
  for (Mask sub = 0; sub < (Mask{1} << members.size()); ++sub) {
    if (count(sub) <= count(am)) continue;
    Mask s = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((sub >> i) & 1U) s |= Mask{1} << members[i];
    }
    bool independent = true;
    for (std::size_t i = 0; i < members.size() && independent; ++i) {
      if (((s >> members[i]) & 1U) && (adj[members[i]] & s)) independent = false;
    }
    if (independent) return false;
  }
  return true;
}

}  // namespace keg::oracle
