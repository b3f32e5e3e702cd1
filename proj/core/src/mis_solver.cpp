#include "detail/mis_solver.hpp"

#include <algorithm>

#include "keg/matching.hpp"

namespace keg::detail {

namespace {
constexpr std::size_t kMatchingBoundMin = 12;
}

std::size_t MisSolver::clique_cover_bound(const VertexSet& candidates) const {
  VertexSet rest = candidates;
  std::size_t cliques = 0;
  for (std::size_t u = rest.find_first(); u < rest.universe(); u = rest.find_next(u)) {
    VertexSet grow = rest & g_.neighbors(static_cast<Vertex>(u));
    rest.erase(static_cast<Vertex>(u));
    for (std::size_t w = grow.find_first(); w < grow.universe(); w = grow.find_first()) {
      rest.erase(static_cast<Vertex>(w));
      grow &= g_.neighbors(static_cast<Vertex>(w));
    }
    ++cliques;
  }
  return cliques;
}

std::size_t MisSolver::greedy_lower_bound(const VertexSet& candidates) const {
  VertexSet rest = candidates;
  std::size_t taken = 0;
  while (!rest.empty()) {
    Vertex pick = 0;
    std::size_t best_degree = static_cast<std::size_t>(-1);
    for (Vertex v : rest) {
      const std::size_t d = g_.neighbors(v).intersection_size(rest);
      if (d < best_degree) {
        best_degree = d;
        pick = v;
      }
    }
    rest -= g_.neighbors(pick);
    rest.erase(pick);
    ++taken;
  }
  return taken;
}

void MisSolver::search(VertexSet candidates, std::size_t chosen) {
  if (done_) return;

  // Isolated and pendant candidates belong to some maximum independent set.
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (Vertex v : candidates) {
      if (g_.neighbors(v).intersection_size(candidates) <= 1) {
        candidates -= g_.neighbors(v);
        candidates.erase(v);
        ++chosen;
        reduced = true;
        break;
      }
    }
  }

  if (candidates.empty()) {
    if (chosen > best_) {
      best_ = chosen;
      if (best_ >= stop_at_) done_ = true;
    }
    return;
  }
  if (chosen + candidates.size() <= best_) return;
  if (chosen + clique_cover_bound(candidates) <= best_) return;
  if (candidates.size() >= kMatchingBoundMin &&
      chosen + candidates.size() - matching_number(g_, candidates) <= best_) {
    return;
  }

  Vertex branch = 0;
  std::size_t branch_degree = 0;
  bool first = true;
  for (Vertex v : candidates) {
    const std::size_t d = g_.neighbors(v).intersection_size(candidates);
    if (first || d > branch_degree) {
      branch = v;
      branch_degree = d;
      first = false;
    }
  }

  VertexSet with = candidates - g_.neighbors(branch);
  with.erase(branch);
  search(std::move(with), chosen + 1);
  candidates.erase(branch);
  search(std::move(candidates), chosen);
}

std::size_t MisSolver::maximum(const VertexSet& candidates) {
  best_ = greedy_lower_bound(candidates);
  stop_at_ = static_cast<std::size_t>(-1);
  done_ = false;
  search(candidates, 0);
  return best_;
}

bool MisSolver::at_least(const VertexSet& candidates, std::size_t k) {
  if (k == 0) return true;
  if (candidates.size() < k) return false;
  if (greedy_lower_bound(candidates) >= k) return true;
  best_ = k - 1;
  stop_at_ = k;
  done_ = false;
  search(candidates, 0);
  return best_ >= k;
}

}  // namespace keg::detail
