#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace keg::detail {

/// Hopcroft-Karp over explicit left/right index spaces. Adjacency is scanned
/// in insertion order, so callers that add edges in ascending order get a
/// deterministic matching.
class HopcroftKarp {
 public:
  static constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);

  HopcroftKarp(std::size_t left, std::size_t right);

  void add_edge(std::uint32_t l, std::uint32_t r) { adj_[l].push_back(r); }
  void reserve(std::uint32_t l, std::size_t k) { adj_[l].reserve(k); }

  /// Seeds the search with an existing matching edge; both ends must be free.
  void preset(std::uint32_t l, std::uint32_t r);

  std::size_t run();

  std::uint32_t mate_left(std::uint32_t l) const { return mate_left_[l]; }
  std::uint32_t mate_right(std::uint32_t r) const { return mate_right_[r]; }
  std::size_t size() const noexcept { return size_; }

  /// Left vertices reachable by alternating paths from unmatched left
  /// vertices (valid after run()).
  std::vector<bool> reachable_from_free_left() const;

 private:
  bool bfs();
  bool dfs(std::uint32_t l);

  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> mate_left_;
  std::vector<std::uint32_t> mate_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> cursor_;
  std::size_t size_ = 0;
};

}  // namespace keg::detail
