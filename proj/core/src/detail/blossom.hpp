#pragma once

#include <cstdint>
#include <vector>

namespace keg::detail {

/// Edmonds' blossom algorithm on an adjacency-list graph.
/// Returns mate[v] (or -1) for every vertex.
std::vector<std::int32_t> edmonds_matching(const std::vector<std::vector<std::uint32_t>>& adj);

}  // namespace keg::detail
