#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

namespace hqc {

/// Exact minimum-weight perfect matching on an undirected weighted graph
/// (blossom). Returns the matched pairs. Throws std::invalid_argument when
/// no perfect matching exists (e.g. odd vertex count).
std::vector<std::pair<std::size_t, std::size_t>> min_weight_perfect_matching(
    std::size_t num_vertices,
    const std::vector<std::tuple<std::size_t, std::size_t, long>>& edges);

}  // namespace hqc
