#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "keg/graph.hpp"

namespace keg {

/// Gate for the exponential-time exact solver.
struct ExactLimits {
  std::size_t max_vertices = 64;
  bool force = false;

  bool admits(std::size_t n) const noexcept { return force || n <= max_vertices; }
};

/// Throws Errc::TooLarge unless limits admit g.
void require_exact(const Graph& g, const ExactLimits& limits);

struct AlphaResult {
  std::size_t size = 0;
  /// Lexicographically smallest maximum independent set (ascending order).
  VertexSet witness;
};

/// alpha(G) by branch and bound on bitsets.
AlphaResult alpha(const Graph& g, const ExactLimits& limits = {});

/// alpha(G[within]); the candidate set must be over g's vertex universe.
std::size_t independence_number(const Graph& g, const VertexSet& within);

/// Whether G[within] has an independent set of size >= k.
bool has_independent_set(const Graph& g, const VertexSet& within, std::size_t k);

/// Lazy lexicographic enumeration of the maximum independent sets.
///
/// Stops after `cap` sets; truncated() then reports whether further sets
/// exist. A stream owns a copy of its graph.
class OmegaStream {
 public:
  OmegaStream(Graph g, std::size_t cap);

  std::optional<VertexSet> next();

  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t produced() const noexcept { return produced_; }
  /// The cap was reached while more sets remained.
  bool truncated() const noexcept { return truncated_; }
  bool exhausted() const noexcept { return stack_.empty(); }

 private:
  struct Frame {
    VertexSet chosen;
    VertexSet candidates;
    std::size_t cursor;
  };

  bool advance(VertexSet& out);

  Graph graph_;
  std::size_t cap_;
  std::size_t alpha_ = 0;
  std::size_t produced_ = 0;
  bool truncated_ = false;
  std::vector<Frame> stack_;
};

inline constexpr std::size_t kDefaultOmegaCap = 1'000'000;

OmegaStream enumerate_maximum_independent_sets(const Graph& g, std::size_t cap = kDefaultOmegaCap,
                                               const ExactLimits& limits = {});

struct OmegaFamily {
  std::vector<VertexSet> sets;
  bool truncated = false;
};

OmegaFamily collect_maximum_independent_sets(const Graph& g, std::size_t cap = kDefaultOmegaCap,
                                             const ExactLimits& limits = {});

/// Intersection of all maximum independent sets, via alpha(G - v) < alpha(G).
VertexSet core(const Graph& g, const ExactLimits& limits = {});

/// |a| = alpha(G[N[a]]). Throws Errc::NotIndependent.
bool is_local_max_independent_set(const Graph& g, const VertexSet& a, const ExactLimits& limits = {});

/// alpha(G - N[s]) + |s| = alpha(G): s lies in some maximum independent set.
/// Throws Errc::NotIndependent.
bool extends_to_maximum(const Graph& g, const VertexSet& s, const ExactLimits& limits = {});

}  // namespace keg
