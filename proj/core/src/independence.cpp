#include "keg/independence.hpp"

#include <string>

#include "detail/mis_solver.hpp"
#include "keg/error.hpp"
#include "keg/graph_ops.hpp"

namespace keg {

namespace {

void require_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) throw Error(Errc::NotIndependent, "set spans an edge");
}

// Drops every member <= v.
void drop_through(VertexSet& s, Vertex v) {
  for (std::size_t u = s.find_first(); u <= v && u < s.universe(); u = s.find_next(u)) {
    s.erase(static_cast<Vertex>(u));
  }
}

}  // namespace

void require_exact(const Graph& g, const ExactLimits& limits) {
  if (!limits.admits(g.order())) {
    throw Error(Errc::TooLarge, "n = " + std::to_string(g.order()) + " exceeds exact-solver limit " +
                                    std::to_string(limits.max_vertices) + " (use force to override)");
  }
}

std::size_t independence_number(const Graph& g, const VertexSet& within) {
  return detail::MisSolver(g).maximum(within);
}

bool has_independent_set(const Graph& g, const VertexSet& within, std::size_t k) {
  return detail::MisSolver(g).at_least(within, k);
}

AlphaResult alpha(const Graph& g, const ExactLimits& limits) {
  require_exact(g, limits);
  detail::MisSolver solver(g);
  AlphaResult result;
  result.size = solver.maximum(g.vertices());
  result.witness = g.empty_set();

  VertexSet open = g.vertices();
  for (Vertex v = 0; v < g.order() && result.witness.size() < result.size; ++v) {
    if (!open.contains(v)) continue;
    VertexSet rest = open - g.neighbors(v);
    drop_through(rest, v);
    if (solver.at_least(rest, result.size - result.witness.size() - 1)) {
      result.witness.insert(v);
      open = std::move(rest);
    } else {
      open.erase(v);
    }
  }
  return result;
}

OmegaStream::OmegaStream(Graph g, std::size_t cap) : graph_(std::move(g)), cap_(cap) {
  alpha_ = detail::MisSolver(graph_).maximum(graph_.vertices());
  stack_.push_back({graph_.empty_set(), graph_.vertices(), 0});
}

bool OmegaStream::advance(VertexSet& out) {
  detail::MisSolver solver(graph_);
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.chosen.size() == alpha_) {
      out = std::move(top.chosen);
      stack_.pop_back();
      return true;
    }
    const std::size_t v = top.candidates.find_next(top.cursor);
    if (v >= top.candidates.universe()) {
      stack_.pop_back();
      continue;
    }
    top.cursor = v + 1;
    VertexSet rest = top.candidates - graph_.neighbors(static_cast<Vertex>(v));
    drop_through(rest, static_cast<Vertex>(v));
    if (solver.at_least(rest, alpha_ - top.chosen.size() - 1)) {
      VertexSet chosen = top.chosen;
      chosen.insert(static_cast<Vertex>(v));
      stack_.push_back({std::move(chosen), std::move(rest), 0});
    }
  }
  return false;
}

std::optional<VertexSet> OmegaStream::next() {
  VertexSet out;
  if (produced_ >= cap_) {
    if (!truncated_ && advance(out)) truncated_ = true;
    stack_.clear();
    return std::nullopt;
  }
  if (!advance(out)) return std::nullopt;
  ++produced_;
  return out;
}

OmegaStream enumerate_maximum_independent_sets(const Graph& g, std::size_t cap, const ExactLimits& limits) {
  require_exact(g, limits);
  return OmegaStream(g, cap);
}

OmegaFamily collect_maximum_independent_sets(const Graph& g, std::size_t cap, const ExactLimits& limits) {
  auto stream = enumerate_maximum_independent_sets(g, cap, limits);
  OmegaFamily family;
  while (auto s = stream.next()) family.sets.push_back(std::move(*s));
  family.truncated = stream.truncated();
  return family;
}

VertexSet core(const Graph& g, const ExactLimits& limits) {
  const AlphaResult a = alpha(g, limits);
  detail::MisSolver solver(g);
  VertexSet result = g.empty_set();
  // core is contained in every maximum independent set, in particular the witness.
  for (Vertex v : a.witness) {
    VertexSet without = g.vertices();
    without.erase(v);
    if (!solver.at_least(without, a.size)) result.insert(v);
  }
  return result;
}

bool is_local_max_independent_set(const Graph& g, const VertexSet& a, const ExactLimits& limits) {
  require_independent(g, a);
  const VertexSet closed = neighborhood(g, a, Neighborhood::closed);
  if (!limits.admits(closed.size())) {
    throw Error(Errc::TooLarge, "|N[a]| = " + std::to_string(closed.size()) + " exceeds exact-solver limit");
  }
  return !detail::MisSolver(g).at_least(closed, a.size() + 1);
}

bool extends_to_maximum(const Graph& g, const VertexSet& s, const ExactLimits& limits) {
  require_independent(g, s);
  require_exact(g, limits);
  detail::MisSolver solver(g);
  const std::size_t whole = solver.maximum(g.vertices());
  const VertexSet rest = g.vertices() - neighborhood(g, s, Neighborhood::closed);
  return s.size() + solver.maximum(rest) == whole;
}

}  // namespace keg
