#include "hqc/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hqc {

namespace {

// Primal-dual blossom algorithm for maximum-weight matching on general
// graphs, O(V^3). Vertices are 1-based; ids above n are contracted
// blossoms. Weights are doubled internally so every dual update stays
// integral.
class Blossom {
public:
    explicit Blossom(int n) : n_(n), cap_(2 * n + 1) {
        g_.assign(cap_ * cap_, {0, 0, 0});
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) edge(u, v) = {u, v, 0};
        lab_.assign(cap_, 0);
        match_.assign(cap_, 0);
        slack_.assign(cap_, 0);
        st_.assign(cap_, 0);
        pa_.assign(cap_, 0);
        s_.assign(cap_, 0);
        vis_.assign(cap_, 0);
        flower_.assign(cap_, {});
        flower_from_.assign(cap_, std::vector<int>(n_ + 1, 0));
    }

    void set_weight(int u, int v, long long w) {
        edge(u, v).w = 2 * w;
        edge(v, u).w = 2 * w;
    }

    // Runs the matching; match(v) is 0 for unmatched vertices.
    void solve() {
        n_x_ = n_;
        std::fill(match_.begin(), match_.end(), 0);
        for (int u = 0; u <= n_; ++u) {
            st_[u] = u;
            flower_[u].clear();
        }
        long long w_max = 0;
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                flower_from_[u][v] = (u == v ? u : 0);
                w_max = std::max(w_max, edge(u, v).w);
            }
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        while (matching()) {
        }
    }

    int match(int v) const { return match_[v]; }

private:
    struct E {
        int u, v;
        long long w;
    };

    E& edge(int u, int v) { return g_[std::size_t(u) * cap_ + v]; }
    const E& edge(int u, int v) const { return g_[std::size_t(u) * cap_ + v]; }

    long long e_delta(const E& e) const { return lab_[e.u] + lab_[e.v] - edge(e.u, e.v).w; }

    void update_slack(int u, int x) {
        if (!slack_[x] || e_delta(edge(u, x)) < e_delta(edge(slack_[x], x))) slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (edge(u, x).w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
        } else {
            for (int i : flower_[x]) q_push(i);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int i : flower_[x]) set_st(i, b);
    }

    int get_pr(int b, int xr) {
        int pr = int(std::find(flower_[b].begin(), flower_[b].end(), xr) - flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return int(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = edge(u, v).v;
        if (u <= n_) return;
        const E& e = edge(u, v);
        int xr = flower_from_[u][e.u];
        int pr = get_pr(u, xr);
        for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++t_; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == t_) return u;
            vis_[u] = t_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            y = st_[match_[x]];
            flower_[b].push_back(y);
            q_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            y = st_[match_[x]];
            flower_[b].push_back(y);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) edge(b, x).w = edge(x, b).w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (edge(b, x).w == 0 || e_delta(edge(xs, x)) < e_delta(edge(b, x))) {
                    edge(b, x) = edge(xs, x);
                    edge(x, b) = edge(x, xs);
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (int i : flower_[b]) set_st(i, i);
        int xr = flower_from_[b][edge(b, pa_[b]).u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower_[b][i], xns = flower_[b][i + 1];
            pa_[xs] = edge(xns, xs).u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (std::size_t i = pr + 1; i < flower_[b].size(); ++i) {
            int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const E& e) {
        int u = st_[e.u], v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            q_push(nu);
        } else if (s_[v] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool matching() {
        std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                q_push(x);
            }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (edge(u, v).w > 0 && st_[u] != st_[v]) {
                        if (e_delta(edge(u, v)) == 0) {
                            if (on_found_edge(edge(u, v))) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            long long d = std::numeric_limits<long long>::max();
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1)
                        d = std::min(d, e_delta(edge(slack_[x], x)));
                    else if (s_[x] == 0)
                        d = std::min(d, e_delta(edge(slack_[x], x)) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[b] == 0)
                        lab_[b] += 2 * d;
                    else if (s_[b] == 1)
                        lab_[b] -= 2 * d;
                }
            q_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    e_delta(edge(slack_[x], x)) == 0)
                    if (on_found_edge(edge(slack_[x], x))) return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
        }
    }

    int n_, cap_, n_x_ = 0, t_ = 0;
    std::vector<E> g_;
    std::vector<long long> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_, flower_from_;
    std::deque<int> q_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> min_weight_perfect_matching(
    std::size_t num_vertices,
    const std::vector<std::tuple<std::size_t, std::size_t, long>>& edges) {
    if (num_vertices == 0) return {};
    if (num_vertices % 2 != 0)
        throw std::invalid_argument("min_weight_perfect_matching: odd vertex count");

    long max_w = 0;
    for (const auto& [u, v, w] : edges) {
        if (u >= num_vertices || v >= num_vertices || u == v || w < 0)
            throw std::invalid_argument("min_weight_perfect_matching: bad edge");
        max_w = std::max(max_w, w);
    }
    // Shift so that maximizing total transformed weight first maximizes
    // cardinality, then minimizes the original weight.
    long long big = (long long)(max_w) * (long long)(num_vertices) + 1;
    Blossom bl{int(num_vertices)};
    for (const auto& [u, v, w] : edges) bl.set_weight(int(u) + 1, int(v) + 1, big - w);
    bl.solve();

    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 1; v <= num_vertices; ++v) {
        if (bl.match(int(v)) == 0)
            throw std::invalid_argument("min_weight_perfect_matching: no perfect matching");
        if (std::size_t(bl.match(int(v))) > v) out.emplace_back(v - 1, bl.match(int(v)) - 1);
    }
    return out;
}

}  // namespace hqc
