#pragma once

#include <cstdint>

#include "keg/graph.hpp"
#include "keg/matching.hpp"

namespace keg {

/// Bipartite double cover: left copy l_v = v, right copy r_v = n + v, and
/// edges l_u - r_v, l_v - r_u for every edge uv.
struct DoubleCover {
  Graph graph;
  VertexSet left;

  static Vertex left_copy(Vertex v) { return v; }
  Vertex right_copy(Vertex v) const { return static_cast<Vertex>(left.size() + v); }
};

DoubleCover bipartite_double_cover(const Graph& g);

/// d(G) = max |S| - |N(S)| over independent S, computed as
/// n - mu(double cover). The maximum over all subsets S has the same value,
/// so no independence search is needed. Never negative.
std::int64_t critical_difference(const Graph& g);

/// d(G[within]) by the same identity.
std::int64_t critical_difference(const Graph& g, const VertexSet& within);

/// s is independent and |s| - |N(s)| = d(G).
bool is_critical(const Graph& g, const VertexSet& s);

struct CriticalWitness {
  VertexSet set;
  std::int64_t value = 0;
  /// Saturates N(set), matching it into set.
  Matching hall_matching;
};

/// A critical independent set of maximum cardinality alpha_c(G).
///
/// Scans vertices once in ascending order, keeping a residual graph H (G
/// minus the closed neighborhoods of the picks so far). v is taken when
/// 1 - |N_H(v)| + d(H - N_H[v]) = d(H), i.e. when v belongs to some critical
/// independent set of H. A vertex rejected once stays rejected, since a
/// critical set of a later residual joined with the picks is critical in the
/// earlier one. The result is checked before returning; a failed check
/// throws Errc::Defect.
CriticalWitness max_critical_independent_set(const Graph& g);

/// A matching from N(s) into s saturating N(s). Throws Errc::NotCritical
/// unless is_critical(g, s); a missing matching for a critical s is a defect.
Matching hall_certificate(const Graph& g, const VertexSet& s);

}  // namespace keg
