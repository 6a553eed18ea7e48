#include "hqc/decode.hpp"

#include <algorithm>
#include <stdexcept>

#include "hqc/matching.hpp"

namespace hqc {

namespace {

// Matches marked nodes pairwise along shortest paths; returns the edge
// support of the concatenated paths.
BitVector match_marks(const EdgeGraph& g, const std::vector<std::size_t>& marks) {
    BitVector correction(g.ends.size());
    if (marks.empty()) return correction;
    if (marks.size() % 2 != 0)
        throw std::invalid_argument("matching: odd number of marked checks");
    std::vector<std::vector<std::size_t>> dist(marks.size()), pn(marks.size()), pe(marks.size());
    for (std::size_t i = 0; i < marks.size(); ++i)
        bfs_tree(g.adj, marks[i], dist[i], &pn[i], &pe[i]);
    std::vector<std::tuple<std::size_t, std::size_t, long>> edges;
    for (std::size_t i = 0; i < marks.size(); ++i)
        for (std::size_t j = i + 1; j < marks.size(); ++j)
            if (dist[i][marks[j]] != kUnreached)
                edges.emplace_back(i, j, long(dist[i][marks[j]]));
    for (auto [i, j] : min_weight_perfect_matching(marks.size(), edges))
        for (std::size_t x = marks[j]; x != marks[i]; x = pn[i][x]) correction.flip(pe[i][x]);
    return correction;
}

std::vector<std::size_t> mark_list(const BitVector& syndrome) { return syndrome.ones(); }

}  // namespace

MatchingDecoder2D::MatchingDecoder2D(const CssCode& code)
    : code_(std::make_shared<CssCode>(code)),
      gz_(make_edge_graph(code.h_x())),
      gx_(make_edge_graph(code.h_z())) {
    if (code.complex().dimension != 2 || code.qubit_level() != 1)
        throw std::invalid_argument("MatchingDecoder2D: need a 2-complex with qubits on edges");
}

BitVector MatchingDecoder2D::decode(const BitVector& syndrome, Pauli side) const {
    const EdgeGraph& g = graph(side);
    if (syndrome.size() != g.nv)
        throw std::invalid_argument("MatchingDecoder2D: syndrome length mismatch");
    return match_marks(g, mark_list(syndrome));
}

BitVector MatchingDecoder2D::decode_noisy(const SpacetimeSyndrome& st, Pauli side) const {
    const EdgeGraph& g = graph(side);
    std::size_t T = st.T;
    if (T < 1 || st.rounds.size() != T + 2)
        throw std::invalid_argument("decode_noisy: need rounds 0..T+1");
    for (const BitVector& r : st.rounds)
        if (r.size() != g.nv) throw std::invalid_argument("decode_noisy: round length mismatch");
    if (!st.rounds[0].is_zero())
        throw std::invalid_argument("decode_noisy: round 0 must be perfect");

    std::size_t E = g.ends.size();
    std::size_t layers = T + 1;  // difference rounds 1..T+1
    // Node (v, t) = (t-1)*nv + v; edge labels < E are qubit (horizontal)
    // edges, labels >= E are measurement (vertical) edges.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(layers * g.nv);
    for (std::size_t t = 0; t < layers; ++t) {
        std::size_t base = t * g.nv;
        for (std::size_t e = 0; e < E; ++e) {
            adj[base + g.ends[e][0]].emplace_back(base + g.ends[e][1], e);
            adj[base + g.ends[e][1]].emplace_back(base + g.ends[e][0], e);
        }
        if (t + 1 < layers)
            for (std::size_t v = 0; v < g.nv; ++v) {
                adj[base + v].emplace_back(base + g.nv + v, E + t * g.nv + v);
                adj[base + g.nv + v].emplace_back(base + v, E + t * g.nv + v);
            }
    }
    std::vector<std::size_t> marks;
    for (std::size_t t = 1; t <= T + 1; ++t) {
        BitVector diff = st.rounds[t];
        diff ^= st.rounds[t - 1];
        for (std::size_t v : diff.ones()) marks.push_back((t - 1) * g.nv + v);
    }
    BitVector correction(code_->n());
    if (marks.empty()) return correction;
    std::vector<std::vector<std::size_t>> dist(marks.size()), pn(marks.size()), pe(marks.size());
    for (std::size_t i = 0; i < marks.size(); ++i)
        bfs_tree(adj, marks[i], dist[i], &pn[i], &pe[i]);
    std::vector<std::tuple<std::size_t, std::size_t, long>> medges;
    for (std::size_t i = 0; i < marks.size(); ++i)
        for (std::size_t j = i + 1; j < marks.size(); ++j)
            if (dist[i][marks[j]] != kUnreached)
                medges.emplace_back(i, j, long(dist[i][marks[j]]));
    for (auto [i, j] : min_weight_perfect_matching(marks.size(), medges))
        for (std::size_t x = marks[j]; x != marks[i]; x = pn[i][x]) {
            std::size_t label = pe[i][x];
            if (label < E) correction.flip(label);
        }
    return correction;
}

BitVector mwpm_decode_2d(const CssCode& code, const BitVector& syndrome, Pauli side) {
    return MatchingDecoder2D(code).decode(syndrome, side);
}

DecodeOutcome classify_residual(const CssCode& code, const BitVector& residual, Pauli side) {
    DecodeOutcome out;
    out.correction = residual;
    out.classification = code.is_logical_failure(residual, side) ? Outcome::logical_failure
                                                                 : Outcome::success;
    return out;
}

Toric4dGeometry::Toric4dGeometry(std::size_t L_) {
    L = L_;
    n4 = L * L * L * L;
    num_faces = 6 * n4;
    num_edges = 4 * n4;
    constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

    // Proper coloring of the L x L torus grid so simultaneously updated
    // faces of one plane group never share an edge: greedy over positions.
    std::vector<std::uint8_t> plane_color(L * L, 255);
    num_colors = 0;
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j) {
            bool used[8] = {false};
            std::size_t nb[4][2] = {{(i + 1) % L, j},
                                    {(i + L - 1) % L, j},
                                    {i, (j + 1) % L},
                                    {i, (j + L - 1) % L}};
            for (auto& [ni, nj] : nb) {
                std::uint8_t c = plane_color[ni * L + nj];
                if (c != 255) used[c] = true;
            }
            std::uint8_t c = 0;
            while (used[c]) ++c;
            plane_color[i * L + j] = c;
            num_colors = std::max(num_colors, int(c) + 1);
        }

    face_edges.resize(num_faces);
    face_ne.resize(num_faces);
    face_color.resize(num_faces);
    auto vidx = [this](std::array<std::size_t, 4> v) {
        return ((v[0] % L * L + v[1] % L) * L + v[2] % L) * L + v[3] % L;
    };
    for (int ci = 0; ci < 6; ++ci) {
        int d1 = kPairs[ci][0], d2 = kPairs[ci][1];
        for (std::size_t x = 0; x < L; ++x)
            for (std::size_t y = 0; y < L; ++y)
                for (std::size_t z = 0; z < L; ++z)
                    for (std::size_t w = 0; w < L; ++w) {
                        std::array<std::size_t, 4> v = {x, y, z, w};
                        std::size_t f = std::size_t(ci) * n4 + vidx(v);
                        std::array<std::size_t, 4> vd1 = v, vd2 = v;
                        vd1[d1]++;
                        vd2[d2]++;
                        face_edges[f] = {std::uint32_t(d1 * n4 + vidx(v)),
                                         std::uint32_t(d1 * n4 + vidx(vd2)),
                                         std::uint32_t(d2 * n4 + vidx(v)),
                                         std::uint32_t(d2 * n4 + vidx(vd1))};
                        face_ne[f] = {face_edges[f][1], face_edges[f][3]};
                        face_color[f] = plane_color[(v[d1] % L) * L + (v[d2] % L)];
                    }
    }
}

BitVector Toric4dGeometry::syndrome_of(const BitVector& error) const {
    BitVector s(num_edges);
    for (std::size_t f : error.ones())
        for (std::uint32_t e : face_edges[f]) s.flip(e);
    return s;
}

void Toric4dGeometry::flip_face(std::size_t f, BitVector& error, BitVector& syndrome) const {
    error.flip(f);
    for (std::uint32_t e : face_edges[f]) syndrome.flip(e);
}

void toom_sweep(const Toric4dGeometry& g, CaGrid4D& grid, const BitVector* noise) {
    std::vector<std::size_t> flips;
    for (int ci = 0; ci < 6; ++ci) {
        flips.clear();
        for (std::size_t f = std::size_t(ci) * g.n4; f < std::size_t(ci + 1) * g.n4; ++f) {
            bool north = grid.syndrome.get(g.face_ne[f][0]) ^ (noise && noise->get(g.face_ne[f][0]));
            bool east = grid.syndrome.get(g.face_ne[f][1]) ^ (noise && noise->get(g.face_ne[f][1]));
            if (north && east) flips.push_back(f);
        }
        for (std::size_t f : flips) g.flip_face(f, grid.error, grid.syndrome);
    }
}

void dklp_sweep(const Toric4dGeometry& g, CaGrid4D& grid, std::mt19937_64& rng,
                const BitVector* noise) {
    std::vector<std::size_t> flips;
    for (int ci = 0; ci < 6; ++ci)
        for (int color = 0; color < g.num_colors; ++color) {
            flips.clear();
            for (std::size_t f = std::size_t(ci) * g.n4; f < std::size_t(ci + 1) * g.n4; ++f) {
                if (g.face_color[f] != color) continue;
                int violated = 0;
                for (std::uint32_t e : g.face_edges[f])
                    violated += grid.syndrome.get(e) ^ (noise && noise->get(e));
                if (violated > 2 || (violated == 2 && (rng() & 1)))
                    flips.push_back(f);
            }
            for (std::size_t f : flips) g.flip_face(f, grid.error, grid.syndrome);
        }
}

DecodeOutcome verify_correctable(const CssCode& code, const Toric4dGeometry& g,
                                 const CaGrid4D& grid, CaRule rule, std::mt19937_64& rng,
                                 std::size_t v_max) {
    if (v_max < 1) throw std::invalid_argument("verify_correctable: v_max must be >= 1");
    CaGrid4D work = grid;
    DecodeOutcome out;
    std::size_t best = work.syndrome.weight();
    std::size_t since_improvement = 0;
    while (true) {
        if (work.syndrome.is_zero()) {
            out.correction = work.error;
            out.classification = code.is_logical_failure(work.error, Pauli::Z)
                                     ? Outcome::logical_failure
                                     : Outcome::success;
            return out;
        }
        if (rule == CaRule::toom)
            toom_sweep(g, work);
        else
            dklp_sweep(g, work, rng);
        ++out.sweeps;
        std::size_t wgt = work.syndrome.weight();
        if (wgt < best) {
            best = wgt;
            since_improvement = 0;
        } else if (++since_improvement >= v_max) {
            out.correction = work.error;
            out.classification = Outcome::stuck_failure;
            return out;
        }
    }
}

BitVector repair_syndrome_4d(const CssCode& code, const BitVector& measured) {
    const ChainComplex& c = code.complex();
    if (c.dimension != 4 || code.qubit_level() != 2)
        throw std::invalid_argument("repair_syndrome_4d: need a 4D code with qubits on faces");
    // Vertex graph of the 1-skeleton with a virtual boundary node absorbing
    // edges that lost endpoints to the open boundary (tesseract family).
    const BitMatrix& d1 = c.boundary(1);
    EdgeGraph g;
    g.nv = d1.rows() + 1;
    std::size_t bnd = d1.rows();
    g.ends.assign(d1.cols(), {bnd, bnd});
    std::vector<int> deg(d1.cols(), 0);
    for (auto [r, col] : d1.entries()) {
        if (deg[col] >= 2) throw std::runtime_error("repair_syndrome_4d: edge with > 2 endpoints");
        g.ends[col][deg[col]++] = r;
    }
    g.adj.assign(g.nv, {});
    for (std::size_t e = 0; e < g.ends.size(); ++e) {
        if (deg[e] == 0) continue;  // fully interiorless edge: unusable for repair
        if (deg[e] == 1) g.ends[e][1] = bnd;
        g.adj[g.ends[e][0]].emplace_back(g.ends[e][1], e);
        g.adj[g.ends[e][1]].emplace_back(g.ends[e][0], e);
    }
    BitVector endpoints = d1.mul(measured);
    std::vector<std::size_t> marks = endpoints.ones();
    if (marks.size() % 2) marks.push_back(bnd);
    BitVector repaired = measured;
    repaired ^= match_marks(g, marks);
    return repaired;
}

}  // namespace hqc
