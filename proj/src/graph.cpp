#include "hqc/graph.hpp"

#include <deque>
#include <stdexcept>

namespace hqc {

EdgeGraph make_edge_graph(const BitMatrix& incidence) {
    EdgeGraph g;
    g.nv = incidence.rows();
    g.ends.assign(incidence.cols(), {0, 0});
    std::vector<int> deg(incidence.cols(), 0);
    for (auto [r, c] : incidence.entries()) {
        if (deg[c] >= 2) throw std::runtime_error("make_edge_graph: column weight > 2");
        g.ends[c][deg[c]++] = r;
    }
    for (std::size_t e = 0; e < incidence.cols(); ++e)
        if (deg[e] != 2) throw std::runtime_error("make_edge_graph: column weight != 2");
    g.adj.assign(g.nv, {});
    for (std::size_t e = 0; e < g.ends.size(); ++e) {
        g.adj[g.ends[e][0]].emplace_back(g.ends[e][1], e);
        g.adj[g.ends[e][1]].emplace_back(g.ends[e][0], e);
    }
    return g;
}

void bfs_tree(const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adj,
              std::size_t src, std::vector<std::size_t>& dist,
              std::vector<std::size_t>* parent_node, std::vector<std::size_t>* parent_edge) {
    dist.assign(adj.size(), kUnreached);
    if (parent_node) parent_node->assign(adj.size(), kUnreached);
    if (parent_edge) parent_edge->assign(adj.size(), kUnreached);
    std::deque<std::size_t> q = {src};
    dist[src] = 0;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (auto [y, e] : adj[x])
            if (dist[y] == kUnreached) {
                dist[y] = dist[x] + 1;
                if (parent_node) (*parent_node)[y] = x;
                if (parent_edge) (*parent_edge)[y] = e;
                q.push_back(y);
            }
    }
}

}  // namespace hqc
