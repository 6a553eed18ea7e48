#include "hqc/complex.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace hqc {

void ChainComplex::validate() const {
    if (level_sizes.size() != std::size_t(dimension) + 1 ||
        boundaries.size() != std::size_t(dimension))
        throw std::runtime_error("ChainComplex: level/boundary count mismatch");
    for (int i = 1; i <= dimension; ++i) {
        const BitMatrix& b = boundary(i);
        if (b.rows() != level_sizes[i - 1] || b.cols() != level_sizes[i])
            throw std::runtime_error("ChainComplex: boundary shape mismatch");
    }
    // Column adjacency of each boundary map, for the parity sweep.
    for (int i = 1; i < dimension; ++i) {
        const BitMatrix& lo = boundary(i);       // i-cells -> (i-1)-cells
        const BitMatrix& hi = boundary(i + 1);   // (i+1)-cells -> i-cells
        std::vector<std::vector<std::size_t>> down(level_sizes[i]);
        for (auto [r, c] : lo.entries()) down[c].push_back(r);
        std::vector<std::vector<std::size_t>> up(level_sizes[i + 1]);
        for (auto [r, c] : hi.entries()) up[c].push_back(r);
        std::vector<int> count(level_sizes[i - 1], 0);
        std::vector<std::size_t> touched;
        for (std::size_t c = 0; c < level_sizes[i + 1]; ++c) {
            touched.clear();
            for (std::size_t mid : up[c])
                for (std::size_t low : down[mid]) {
                    if (count[low]++ == 0) touched.push_back(low);
                }
            for (std::size_t low : touched) {
                if (count[low] != 0 && count[low] != 2)
                    throw std::runtime_error("ChainComplex: incidence parity violated");
                count[low] = 0;
            }
        }
    }
    for (int i = 1; i < dimension; ++i)
        if (!boundary(i).mul(boundary(i + 1)).is_zero())
            throw std::runtime_error("ChainComplex: boundary of boundary nonzero");
}

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (int i = 0; i <= dimension; ++i)
        chi += (i % 2 == 0 ? 1 : -1) * (long long)level_sizes[i];
    return chi;
}

std::size_t homology_dimension(const ChainComplex& c, int i) {
    if (i < 0 || i > c.dimension) throw std::invalid_argument("homology_dimension: bad level");
    std::size_t dim_ker =
        i == 0 ? c.level_sizes[0] : c.level_sizes[i] - rank(c.boundary(i));
    std::size_t rank_next = i == c.dimension ? 0 : rank(c.boundary(i + 1));
    return dim_ker - rank_next;
}

ChainComplex dual(const ChainComplex& c) {
    ChainComplex d;
    d.dimension = c.dimension;
    d.level_sizes.assign(c.level_sizes.rbegin(), c.level_sizes.rend());
    for (int i = c.dimension; i >= 1; --i) d.boundaries.push_back(c.boundary(i).transposed());
    d.family = "dual(" + c.family + ")";
    d.params = c.params;
    return d;
}

ChainComplex build_toric_2d(std::size_t L) {
    if (L < 2) throw std::invalid_argument("build_toric_2d: L must be >= 2");
    std::size_t V = L * L, E = 2 * L * L, F = L * L;
    auto vid = [L](std::size_t x, std::size_t y) { return (x % L) * L + (y % L); };
    // Edge dir 0 runs along x from (x,y); dir 1 along y.
    auto eid = [L](std::size_t dir, std::size_t x, std::size_t y) {
        return dir * L * L + (x % L) * L + (y % L);
    };
    std::vector<std::pair<std::size_t, std::size_t>> d1, d2;
    for (std::size_t x = 0; x < L; ++x)
        for (std::size_t y = 0; y < L; ++y) {
            d1.emplace_back(vid(x, y), eid(0, x, y));
            d1.emplace_back(vid(x + 1, y), eid(0, x, y));
            d1.emplace_back(vid(x, y), eid(1, x, y));
            d1.emplace_back(vid(x, y + 1), eid(1, x, y));
            std::size_t f = x * L + y;
            d2.emplace_back(eid(0, x, y), f);
            d2.emplace_back(eid(0, x, y + 1), f);
            d2.emplace_back(eid(1, x, y), f);
            d2.emplace_back(eid(1, x + 1, y), f);
        }
    ChainComplex c;
    c.dimension = 2;
    c.level_sizes = {V, E, F};
    c.boundaries = {BitMatrix::from_entries(V, E, d1), BitMatrix::from_entries(E, F, d2)};
    c.family = "toric2d";
    c.params["L"] = std::to_string(L);
    return c;
}

ChainComplex build_rotated_toric(std::size_t L) {
    if (L < 2 || L % 2 != 0)
        throw std::invalid_argument("build_rotated_toric: L must be even and >= 2");
    // Qubits on lattice points; each unit square takes its color from the
    // parity of its base corner. Even squares act as 0-cells, odd as 2-cells.
    std::size_t n = L * L, half = n / 2;
    auto qid = [L](std::size_t x, std::size_t y) { return (x % L) * L + (y % L); };
    std::vector<std::size_t> square_index(n);  // base corner id -> per-color index
    std::size_t even_count = 0, odd_count = 0;
    for (std::size_t x = 0; x < L; ++x)
        for (std::size_t y = 0; y < L; ++y)
            square_index[x * L + y] = ((x + y) % 2 == 0) ? even_count++ : odd_count++;
    std::vector<std::pair<std::size_t, std::size_t>> d1, d2;
    for (std::size_t x = 0; x < L; ++x)
        for (std::size_t y = 0; y < L; ++y) {
            std::size_t si = square_index[x * L + y];
            std::array<std::size_t, 4> corners = {qid(x, y), qid(x + 1, y), qid(x, y + 1),
                                                  qid(x + 1, y + 1)};
            for (std::size_t q : corners) {
                if ((x + y) % 2 == 0)
                    d1.emplace_back(si, q);
                else
                    d2.emplace_back(q, si);
            }
        }
    ChainComplex c;
    c.dimension = 2;
    c.level_sizes = {half, n, half};
    c.boundaries = {BitMatrix::from_entries(half, n, d1), BitMatrix::from_entries(n, half, d2)};
    c.family = "rotated";
    c.params["L"] = std::to_string(L);
    return c;
}

namespace {

std::vector<std::vector<int>> direction_combos(int k) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < 16; ++mask) {
        if (std::popcount(unsigned(mask)) != k) continue;
        std::vector<int> dirs;
        for (int d = 0; d < 4; ++d)
            if (mask >> d & 1) dirs.push_back(d);
        out.push_back(dirs);
    }
    // Lexicographic over direction tuples.
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ChainComplex build_toric_4d(std::size_t L) {
    if (L < 2) throw std::invalid_argument("build_toric_4d: L must be >= 2");
    std::size_t n4 = L * L * L * L;
    auto vidx = [L](std::array<std::size_t, 4> v) {
        return ((v[0] % L * L + v[1] % L) * L + v[2] % L) * L + v[3] % L;
    };
    std::array<std::vector<std::vector<int>>, 5> combos;
    for (int k = 0; k <= 4; ++k) combos[k] = direction_combos(k);
    auto combo_index = [&](int k, const std::vector<int>& dirs) {
        for (std::size_t i = 0; i < combos[k].size(); ++i)
            if (combos[k][i] == dirs) return i;
        throw std::logic_error("combo not found");
    };
    ChainComplex c;
    c.dimension = 4;
    for (int k = 0; k <= 4; ++k) c.level_sizes.push_back(combos[k].size() * n4);
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::pair<std::size_t, std::size_t>> entries;
        for (std::size_t ci = 0; ci < combos[k].size(); ++ci) {
            const std::vector<int>& dirs = combos[k][ci];
            for (std::size_t x = 0; x < L; ++x)
                for (std::size_t y = 0; y < L; ++y)
                    for (std::size_t z = 0; z < L; ++z)
                        for (std::size_t w = 0; w < L; ++w) {
                            std::array<std::size_t, 4> v = {x, y, z, w};
                            std::size_t col = ci * n4 + vidx(v);
                            for (int d : dirs) {
                                std::vector<int> sub;
                                for (int e : dirs)
                                    if (e != d) sub.push_back(e);
                                std::size_t si = combo_index(k - 1, sub);
                                entries.emplace_back(si * n4 + vidx(v), col);
                                std::array<std::size_t, 4> v2 = v;
                                v2[d]++;
                                entries.emplace_back(si * n4 + vidx(v2), col);
                            }
                        }
        }
        c.boundaries.push_back(
            BitMatrix::from_entries(c.level_sizes[k - 1], c.level_sizes[k], entries));
    }
    c.family = "toric4d";
    c.params["L"] = std::to_string(L);
    return c;
}

ChainComplex build_tesseract(std::size_t L) {
    if (L < 2) throw std::invalid_argument("build_tesseract: L must be >= 2");
    // Box with x,y spanning L intervals and z,w spanning L-1 intervals, all
    // non-periodic; every cell lying inside an x in {0,L} or y in {0,L}
    // hyperplane is deleted.
    std::array<std::size_t, 4> nverts = {L + 1, L + 1, L, L};  // vertex values per axis
    std::array<std::vector<std::vector<int>>, 5> combos;
    for (int k = 0; k <= 4; ++k) combos[k] = direction_combos(k);

    auto key = [&](int k, std::size_t ci, std::array<std::size_t, 4> v) {
        std::size_t h = std::size_t(k) * 8 + ci;
        for (int d = 0; d < 4; ++d) h = h * (L + 2) + v[d];
        return h;
    };
    auto removed = [&](const std::vector<int>& dirs, std::array<std::size_t, 4> v) {
        bool span_x = std::find(dirs.begin(), dirs.end(), 0) != dirs.end();
        bool span_y = std::find(dirs.begin(), dirs.end(), 1) != dirs.end();
        if (!span_x && (v[0] == 0 || v[0] == L)) return true;
        if (!span_y && (v[1] == 0 || v[1] == L)) return true;
        return false;
    };

    ChainComplex c;
    c.dimension = 4;
    std::unordered_map<std::size_t, std::size_t> ids;
    std::array<std::vector<std::pair<std::vector<int>, std::array<std::size_t, 4>>>, 5> cells;
    for (int k = 0; k <= 4; ++k) {
        std::size_t count = 0;
        for (std::size_t ci = 0; ci < combos[k].size(); ++ci) {
            const std::vector<int>& dirs = combos[k][ci];
            std::array<std::size_t, 4> lim = nverts;
            for (int d : dirs) lim[d]--;  // base of a spanned interval
            std::array<std::size_t, 4> v = {0, 0, 0, 0};
            while (true) {
                if (!removed(dirs, v)) {
                    ids[key(k, ci, v)] = count++;
                    cells[k].emplace_back(dirs, v);
                }
                int d = 3;
                while (d >= 0 && ++v[d] == lim[d]) v[d--] = 0;
                if (d < 0) break;
            }
        }
        c.level_sizes.push_back(count);
    }
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::pair<std::size_t, std::size_t>> entries;
        for (std::size_t col = 0; col < cells[k].size(); ++col) {
            const auto& [dirs, v] = cells[k][col];
            for (int d : dirs) {
                std::vector<int> sub;
                for (int e : dirs)
                    if (e != d) sub.push_back(e);
                std::size_t si = 0;
                while (combos[k - 1][si] != sub) ++si;
                for (int step = 0; step <= 1; ++step) {
                    std::array<std::size_t, 4> v2 = v;
                    v2[d] += step;
                    auto it = ids.find(key(k - 1, si, v2));
                    if (it != ids.end()) entries.emplace_back(it->second, col);
                }
            }
        }
        c.boundaries.push_back(
            BitMatrix::from_entries(c.level_sizes[k - 1], c.level_sizes[k], entries));
    }
    c.family = "tesseract";
    c.params["L"] = std::to_string(L);
    return c;
}

ChainComplex semi_hyperbolic(const ChainComplex& base, std::size_t l) {
    if (base.dimension != 2) throw std::invalid_argument("semi_hyperbolic: need a 2-complex");
    if (l < 1) throw std::invalid_argument("semi_hyperbolic: l must be >= 1");
    std::size_t V = base.level_sizes[0], E = base.level_sizes[1], F = base.level_sizes[2];
    if (l == 1) {
        ChainComplex copy = base;
        copy.family = "semihyperbolic(" + base.family + ")";
        copy.params["l"] = "1";
        return copy;
    }

    // Endpoints of each edge; each edge oriented from its smaller endpoint.
    std::vector<std::array<std::size_t, 2>> ends(E, {0, 0});
    {
        std::vector<int> deg(E, 0);
        for (auto [r, c] : base.boundary(1).entries()) {
            if (deg[c] >= 2) throw std::invalid_argument("semi_hyperbolic: edge with >2 endpoints");
            ends[c][deg[c]++] = r;
        }
        for (std::size_t e = 0; e < E; ++e) {
            if (deg[e] != 2 || ends[e][0] == ends[e][1])
                throw std::invalid_argument("semi_hyperbolic: degenerate edge");
            if (ends[e][0] > ends[e][1]) std::swap(ends[e][0], ends[e][1]);
        }
    }
    // Edges of each face.
    std::vector<std::vector<std::size_t>> face_edges(F);
    for (auto [r, c] : base.boundary(2).entries()) face_edges[c].push_back(r);

    std::size_t nV = V + E * (l - 1) + F * (l - 1) * (l - 1);
    std::size_t nE = E * l + F * 2 * l * (l - 1);
    std::size_t nF = F * l * l;
    std::vector<std::pair<std::size_t, std::size_t>> d1, d2;

    // Sub-edge t of edge e joins points t and t+1 along the oriented edge.
    auto edge_point = [&](std::size_t e, std::size_t t) {
        if (t == 0) return ends[e][0];
        if (t == l) return ends[e][1];
        return V + e * (l - 1) + (t - 1);
    };
    for (std::size_t e = 0; e < E; ++e)
        for (std::size_t t = 0; t < l; ++t) {
            d1.emplace_back(edge_point(e, t), e * l + t);
            d1.emplace_back(edge_point(e, t + 1), e * l + t);
        }

    for (std::size_t f = 0; f < F; ++f) {
        if (face_edges[f].size() != 4)
            throw std::invalid_argument("semi_hyperbolic: non-square face");
        // Walk the boundary: corner cycle c0..c3 with walk_edges[i] joining
        // c_i and c_{i+1}.
        std::sort(face_edges[f].begin(), face_edges[f].end());
        std::array<std::size_t, 4> corner, walk;
        walk[0] = face_edges[f][0];
        corner[0] = ends[walk[0]][0];
        corner[1] = ends[walk[0]][1];
        for (int i = 1; i < 4; ++i) {
            std::size_t at = corner[i];
            std::size_t next_edge = E, next_vertex = 0;
            int found = 0;
            for (std::size_t e : face_edges[f]) {
                if (e == walk[i - 1]) continue;
                for (int s = 0; s < 2; ++s)
                    if (ends[e][s] == at) {
                        next_edge = e;
                        next_vertex = ends[e][1 - s];
                        found++;
                    }
            }
            if (found != 1)
                throw std::invalid_argument("semi_hyperbolic: face boundary not a simple 4-cycle");
            walk[i] = next_edge;
            if (i < 3) corner[i + 1] = next_vertex;
            else if (next_vertex != corner[0])
                throw std::invalid_argument("semi_hyperbolic: face boundary does not close");
        }

        // Grid coordinates (u,w) in 0..l: corners (0,0)=c0, (l,0)=c1,
        // (l,l)=c2, (0,l)=c3. Distance of a boundary grid point from the
        // oriented start of the underlying edge.
        auto grid_vertex = [&](std::size_t u, std::size_t w) -> std::size_t {
            if (u > 0 && u < l && w > 0 && w < l)
                return V + E * (l - 1) + f * (l - 1) * (l - 1) + (u - 1) * (l - 1) + (w - 1);
            if (w == 0) {
                std::size_t t = (ends[walk[0]][0] == corner[0]) ? u : l - u;
                return edge_point(walk[0], t);
            }
            if (u == l) {
                std::size_t t = (ends[walk[1]][0] == corner[1]) ? w : l - w;
                return edge_point(walk[1], t);
            }
            if (w == l) {
                std::size_t t = (ends[walk[2]][0] == corner[2]) ? l - u : u;
                return edge_point(walk[2], t);
            }
            std::size_t t = (ends[walk[3]][0] == corner[3]) ? l - w : w;
            return edge_point(walk[3], t);
        };
        std::size_t ibase = E * l + f * 2 * l * (l - 1);
        // Horizontal sub-edge (u,w)-(u+1,w); boundary rows reuse the split
        // original edges.
        auto h_edge = [&](std::size_t u, std::size_t w) -> std::size_t {
            if (w == 0) {
                std::size_t t0 = (ends[walk[0]][0] == corner[0]) ? u : l - u - 1;
                return walk[0] * l + t0;
            }
            if (w == l) {
                std::size_t t0 = (ends[walk[2]][0] == corner[2]) ? l - u - 1 : u;
                return walk[2] * l + t0;
            }
            return ibase + (w - 1) * l + u;
        };
        auto v_edge = [&](std::size_t u, std::size_t w) -> std::size_t {
            if (u == 0) {
                std::size_t t0 = (ends[walk[3]][0] == corner[3]) ? l - w - 1 : w;
                return walk[3] * l + t0;
            }
            if (u == l) {
                std::size_t t0 = (ends[walk[1]][0] == corner[1]) ? w : l - w - 1;
                return walk[1] * l + t0;
            }
            return ibase + l * (l - 1) + (u - 1) * l + w;
        };
        for (std::size_t w = 1; w < l; ++w)
            for (std::size_t u = 0; u < l; ++u) {
                d1.emplace_back(grid_vertex(u, w), h_edge(u, w));
                d1.emplace_back(grid_vertex(u + 1, w), h_edge(u, w));
            }
        for (std::size_t u = 1; u < l; ++u)
            for (std::size_t w = 0; w < l; ++w) {
                d1.emplace_back(grid_vertex(u, w), v_edge(u, w));
                d1.emplace_back(grid_vertex(u, w + 1), v_edge(u, w));
            }
        for (std::size_t u = 0; u < l; ++u)
            for (std::size_t w = 0; w < l; ++w) {
                std::size_t sf = f * l * l + u * l + w;
                d2.emplace_back(h_edge(u, w), sf);
                d2.emplace_back(h_edge(u, w + 1), sf);
                d2.emplace_back(v_edge(u, w), sf);
                d2.emplace_back(v_edge(u + 1, w), sf);
            }
    }

    ChainComplex c;
    c.dimension = 2;
    c.level_sizes = {nV, nE, nF};
    c.boundaries = {BitMatrix::from_entries(nV, nE, d1), BitMatrix::from_entries(nE, nF, d2)};
    c.family = "semihyperbolic(" + base.family + ")";
    c.params = base.params;
    c.params["l"] = std::to_string(l);
    return c;
}

}  // namespace hqc
