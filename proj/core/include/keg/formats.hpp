#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "keg/graph.hpp"

namespace keg {

struct Graph6Options {
  std::size_t max_vertices = 1'000'000;
};

/// Decodes one graph6 record. A leading ">>graph6<<" header and a single
/// trailing line break are accepted.
Graph parse_graph6(std::string_view text, const Graph6Options& options = {});

/// Canonical graph6: no header, shortest size prefix, no line break.
std::string emit_graph6(const Graph& g);

struct EdgeListResult {
  Graph graph;
  std::size_t duplicate_edges = 0;

  bool had_duplicates() const noexcept { return duplicate_edges != 0; }
};

/// Parses a human-authored edge list.
///
///   # comment
///   vertices: a b c d      (or "vertices: 5" for indices 0..4)
///   a b
///   b c
///
/// Without a header, tokens that are all non-negative integers are read as
/// 0-based indices; otherwise they are labels numbered in order of first
/// appearance.
EdgeListResult parse_edge_list(std::string_view text);

/// Emits a "vertices:" header followed by one edge per line, using labels.
std::string emit_edge_list(const Graph& g);

}  // namespace keg
