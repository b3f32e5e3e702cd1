#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "keg/graph.hpp"

namespace keg {

/// Named example graphs: H1, H2, H3, G1, G2, GF10.
Graph fixture(std::string_view name);
std::span<const std::string_view> fixture_names();

/// Deterministic families. Parameters:
///   path n | cycle n (n >= 3) | complete n | complete_minus_edge n (n >= 2,
///   the missing edge is {0,1}) | star k (center 0, leaves 1..k) |
///   complete_bipartite a b | empty n
Graph generate(std::string_view family, std::span<const std::size_t> params);
Graph generate(std::string_view family, std::initializer_list<std::size_t> params);
std::span<const std::string_view> family_names();

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20090001;

/// G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

struct BipartiteGraph {
  Graph graph;
  VertexSet left;
};

/// Random bipartite graph with sides {0..a-1} and {a..a+b-1}.
BipartiteGraph random_bipartite(std::size_t a, std::size_t b, double p, Rng& rng);

}  // namespace keg
