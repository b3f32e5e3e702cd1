#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "keg/graph.hpp"

/// Exhaustive reference implementations. They read adjacency through
/// Graph::has_edge only and share no code with the solvers they check.
namespace keg::oracle {

inline constexpr std::size_t kMaxVertices = 20;
inline constexpr std::size_t kMaxEdges = 24;

enum class SubsetFamily { independent_only, all_subsets };

std::size_t brute_alpha(const Graph& g);

/// Enumerates edge subsets with pruning; throws Errc::TooLarge above max_edges.
std::size_t brute_mu(const Graph& g, std::size_t max_edges = kMaxEdges);

std::int64_t brute_critical_difference(const Graph& g, SubsetFamily family);

struct AlphaC {
  std::size_t size = 0;
  VertexSet witness;  ///< lexicographically least maximum critical set
};

AlphaC brute_alpha_c(const Graph& g);
VertexSet brute_core(const Graph& g);

std::vector<VertexSet> brute_maximum_independent_sets(const Graph& g);
std::vector<VertexSet> brute_critical_independent_sets(const Graph& g);

/// |N(W) n into| >= |W| for every W subset of from.
bool brute_hall_condition(const Graph& g, const VertexSet& from, const VertexSet& into);

/// No independent subset of N[a] is larger than a.
bool brute_is_local_max(const Graph& g, const VertexSet& a);

}  // namespace keg::oracle
