#include "detail/hopcroft_karp.hpp"

#include <limits>
#include <queue>

namespace keg::detail {

namespace {
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
}

HopcroftKarp::HopcroftKarp(std::size_t left, std::size_t right)
    : adj_(left), mate_left_(left, npos), mate_right_(right, npos), dist_(left), cursor_(left) {}

void HopcroftKarp::preset(std::uint32_t l, std::uint32_t r) {
  mate_left_[l] = r;
  mate_right_[r] = l;
  ++size_;
}

bool HopcroftKarp::bfs() {
  std::queue<std::uint32_t> q;
  bool found = false;
  for (std::uint32_t l = 0; l < adj_.size(); ++l) {
    if (mate_left_[l] == npos) {
      dist_[l] = 0;
      q.push(l);
    } else {
      dist_[l] = kInf;
    }
  }
  while (!q.empty()) {
    const std::uint32_t l = q.front();
    q.pop();
    for (std::uint32_t r : adj_[l]) {
      const std::uint32_t next = mate_right_[r];
      if (next == npos) {
        found = true;
      } else if (dist_[next] == kInf) {
        dist_[next] = dist_[l] + 1;
        q.push(next);
      }
    }
  }
  return found;
}

bool HopcroftKarp::dfs(std::uint32_t l) {
  for (std::size_t& i = cursor_[l]; i < adj_[l].size(); ++i) {
    const std::uint32_t r = adj_[l][i];
    const std::uint32_t next = mate_right_[r];
    if (next == npos || (dist_[next] == dist_[l] + 1 && dfs(next))) {
      mate_left_[l] = r;
      mate_right_[r] = l;
      ++i;
      return true;
    }
  }
  dist_[l] = kInf;
  return false;
}

std::size_t HopcroftKarp::run() {
  while (bfs()) {
    for (auto& c : cursor_) c = 0;
    for (std::uint32_t l = 0; l < adj_.size(); ++l) {
      if (mate_left_[l] == npos && dfs(l)) ++size_;
    }
  }
  return size_;
}

std::vector<bool> HopcroftKarp::reachable_from_free_left() const {
  std::vector<bool> seen(adj_.size(), false);
  std::queue<std::uint32_t> q;
  for (std::uint32_t l = 0; l < adj_.size(); ++l) {
    if (mate_left_[l] == npos) {
      seen[l] = true;
      q.push(l);
    }
  }
  while (!q.empty()) {
    const std::uint32_t l = q.front();
    q.pop();
    for (std::uint32_t r : adj_[l]) {
      const std::uint32_t next = mate_right_[r];
      if (next != npos && !seen[next]) {
        seen[next] = true;
        q.push(next);
      }
    }
  }
  return seen;
}

}  // namespace keg::detail
