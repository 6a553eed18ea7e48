#include "hqc/distance.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "hqc/graph.hpp"

namespace hqc {

namespace {

// Adjacency of the doubled graph for a given crossover support: node ids
// v and v + nv; crossover edges swap the copy.
struct Doubled {
    std::size_t nv;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // (node, edge)
    std::vector<std::size_t> sources;  // endpoints of crossover edges
};

Doubled doubled_graph(const EdgeGraph& g, const BitVector& support) {
    Doubled d;
    d.nv = g.nv;
    d.adj.assign(2 * g.nv, {});
    std::vector<char> is_src(g.nv, 0);
    for (std::size_t e = 0; e < g.ends.size(); ++e) {
        auto [u, v] = g.ends[e];
        if (support.get(e)) {
            d.adj[u].emplace_back(v + g.nv, e);
            d.adj[v + g.nv].emplace_back(u, e);
            d.adj[v].emplace_back(u + g.nv, e);
            d.adj[u + g.nv].emplace_back(v, e);
            is_src[u] = is_src[v] = 1;
        } else {
            d.adj[u].emplace_back(v, e);
            d.adj[v].emplace_back(u, e);
            d.adj[u + g.nv].emplace_back(v + g.nv, e);
            d.adj[v + g.nv].emplace_back(u + g.nv, e);
        }
    }
    for (std::size_t v = 0; v < g.nv; ++v)
        if (is_src[v]) d.sources.push_back(v);
    return d;
}

std::vector<std::size_t> bfs(const Doubled& d, std::size_t src,
                             std::vector<std::size_t>* parent_node = nullptr,
                             std::vector<std::size_t>* parent_edge = nullptr) {
    std::vector<std::size_t> dist;
    bfs_tree(d.adj, src, dist, parent_node, parent_edge);
    return dist;
}

DistanceResult min_logical(const CssCode& code, const BitMatrix& incidence,
                           const std::vector<BitVector>& crossover_supports, Pauli side,
                           bool want_witness) {
    if (crossover_supports.empty()) throw std::runtime_error("distance: no logical operators");
    EdgeGraph g = make_edge_graph(incidence);
    DistanceResult best;
    best.d = kUnreached;
    for (const BitVector& s : crossover_supports) {
        Doubled d = doubled_graph(g, s);
        for (std::size_t src : d.sources) {
            std::vector<std::size_t> pn, pe;
            auto dist = want_witness ? bfs(d, src, &pn, &pe) : bfs(d, src);
            std::size_t len = dist[src + g.nv];
            if (len > best.d || (len == best.d && (!want_witness || best.witness))) continue;
            if (len < best.d) {
                best.d = len;
                best.witness.reset();
            }
            if (!want_witness) continue;
            BitVector w(code.n());
            for (std::size_t x = src + g.nv; x != src; x = pn[x]) w.flip(pe[x]);
            if (w.weight() == len && code.syndrome(w, side).is_zero() &&
                code.is_logical_failure(w, side))
                best.witness = std::move(w);
        }
    }
    if (best.d == kUnreached) throw std::runtime_error("distance: no cycle found");
    return best;
}

// Node-edge incidence carrying the cycles of the requested type, and the
// opposite-type logical supports the cycles must cross.
void side_inputs(const CssCode& code, const LogicalBasis& logicals, Pauli side,
                 BitMatrix& incidence, std::vector<BitVector>& supports) {
    const ChainComplex& c = code.complex();
    if (c.dimension != 2 || code.qubit_level() != 1)
        throw std::runtime_error("distance: need a 2-complex with qubits on edges");
    if (side == Pauli::Z) {
        incidence = code.h_x();
        supports = logicals.x_ops;
    } else {
        incidence = code.h_z();
        supports = logicals.z_ops;
    }
}

}  // namespace

DistanceResult z_distance(const CssCode& code, const LogicalBasis& logicals, bool want_witness) {
    BitMatrix inc;
    std::vector<BitVector> sup;
    side_inputs(code, logicals, Pauli::Z, inc, sup);
    return min_logical(code, inc, sup, Pauli::Z, want_witness);
}

DistanceResult x_distance(const CssCode& code, const LogicalBasis& logicals, bool want_witness) {
    BitMatrix inc;
    std::vector<BitVector> sup;
    side_inputs(code, logicals, Pauli::X, inc, sup);
    return min_logical(code, inc, sup, Pauli::X, want_witness);
}

MinWeightCount count_min_weight_logicals(const CssCode& code, const LogicalBasis& logicals,
                                         Pauli side, std::size_t cap) {
    BitMatrix inc;
    std::vector<BitVector> sup;
    side_inputs(code, logicals, side, inc, sup);
    EdgeGraph g = make_edge_graph(inc);
    std::size_t d = min_logical(code, inc, sup, side, false).d;

    std::set<std::vector<std::uint32_t>> found;
    std::vector<std::uint32_t> edges;
    for (const BitVector& s : sup) {
        Doubled dg = doubled_graph(g, s);
        for (std::size_t src : dg.sources) {
            auto dist = bfs(dg, src);
            if (dist[src + g.nv] != d) continue;
            // Enumerate every shortest path by walking the BFS level DAG
            // backward from the far copy.
            edges.clear();
            auto rec = [&](auto&& self, std::size_t x) -> void {
                if (dist[x] == 0) {
                    std::vector<std::uint32_t> canon = edges;
                    std::sort(canon.begin(), canon.end());
                    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
                        return;  // revisits an edge; not a weight-d support
                    found.insert(std::move(canon));
                    if (found.size() > cap)
                        throw std::runtime_error("count_min_weight_logicals: cap exceeded");
                    return;
                }
                for (auto [y, e] : dg.adj[x])
                    if (dist[y] + 1 == dist[x]) {
                        edges.push_back(std::uint32_t(e));
                        self(self, y);
                        edges.pop_back();
                    }
            };
            rec(rec, src + g.nv);
        }
    }
    return {d, found.size()};
}

std::optional<std::size_t> brute_force_distance(const CssCode& code, Pauli side,
                                                std::size_t w_max) {
    std::size_t n = code.n();
    double total = 0;
    double binom = 1;
    for (std::size_t w = 1; w <= w_max; ++w) {
        binom = binom * double(n - w + 1) / double(w);
        total += binom;
    }
    if (total > 1e8) throw std::runtime_error("brute_force_distance: subset guard exceeded");

    const BitMatrix& checks = side == Pauli::Z ? code.h_x() : code.h_z();
    std::vector<BitVector> col(n, BitVector(checks.rows()));
    for (auto [r, c] : checks.entries()) col[c].flip(r);

    for (std::size_t w = 1; w <= w_max; ++w) {
        std::vector<std::size_t> idx(w);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        if (w > n) break;
        while (true) {
            BitVector syn(checks.rows());
            for (std::size_t i : idx) syn ^= col[i];
            if (syn.is_zero()) {
                BitVector supp = BitVector::from_ones(n, idx);
                if (code.is_logical_failure(supp, side)) return w;
            }
            // next combination
            bool advanced = false;
            for (std::size_t i = w; i-- > 0;) {
                if (idx[i] + 1 <= n - w + i) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    return std::nullopt;
}

}  // namespace hqc
