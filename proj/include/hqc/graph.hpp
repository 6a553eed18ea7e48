#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hqc/gf2.hpp"

namespace hqc {

/// View of a node-edge incidence matrix (every column of weight exactly 2)
/// as an undirected multigraph. Adjacency lists are in ascending edge order,
/// so breadth-first searches are deterministic.
struct EdgeGraph {
    std::size_t nv = 0;
    std::vector<std::array<std::size_t, 2>> ends;                       // per edge
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // node -> (node, edge)
};

/// Throws std::runtime_error when a column has weight != 2.
EdgeGraph make_edge_graph(const BitMatrix& incidence);

inline constexpr std::size_t kUnreached = std::size_t(-1);

/// Unit-weight shortest-path tree from src. Parent arrays are optional; a
/// node's path is recovered by walking parent_node/parent_edge back to src.
void bfs_tree(const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj,
              std::size_t src, std::vector<std::size_t>& dist,
              std::vector<std::size_t>* parent_node = nullptr,
              std::vector<std::size_t>* parent_edge = nullptr);

}  // namespace hqc
