#include "hqc/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hqc {

GroupPresentation reflection_group(int r, int s) {
    if (r < 3 || s < 3) throw std::invalid_argument("reflection_group: need r,s >= 3");
    GroupPresentation p;
    p.num_generators = 3;
    p.relators = {{0, 0}, {1, 1}, {2, 2}};
    std::vector<int> ab, bc;
    for (int i = 0; i < r; ++i) { ab.push_back(0); ab.push_back(1); }
    for (int i = 0; i < s; ++i) { bc.push_back(1); bc.push_back(2); }
    p.relators.push_back(ab);
    p.relators.push_back(bc);
    p.relators.push_back({0, 2, 0, 2});
    return p;
}

int CosetTable::apply(int coset, const std::vector<int>& word) const {
    for (int g : word) coset = action[g][coset];
    return coset;
}

bool CosetTable::word_is_identity(const std::vector<int>& word) const {
    for (std::size_t c = 0; c < num_cosets; ++c)
        if (apply(int(c), word) != int(c)) return false;
    return true;
}

namespace {

// HLT-style coset enumeration over the trivial subgroup. Tables satisfy
// t[g][p] = q iff t[inv(g)][q] = p; involutory generators are their own
// inverses.
class Enumerator {
public:
    Enumerator(std::size_t ngens, std::vector<int> inverse, std::size_t max_cosets)
        : ngens_(ngens), max_(max_cosets), inv_(std::move(inverse)), table_(ngens) {
        if (inv_.empty()) {
            inv_.resize(ngens_);
            std::iota(inv_.begin(), inv_.end(), 0);
        }
        new_coset();
    }

    void run(const std::vector<std::vector<int>>& relators) {
        for (std::size_t alpha = 0; alpha < rep_.size(); ++alpha) {
            if (find(alpha) != alpha) continue;
            for (const auto& rel : relators) {
                scan_and_fill(alpha, rel);
                if (find(alpha) != alpha) break;
            }
        }
    }

    CosetTable compact() const {
        std::vector<int> newid(rep_.size(), -1);
        int live = 0;
        for (std::size_t i = 0; i < rep_.size(); ++i)
            if (find(i) == i) newid[i] = live++;
        CosetTable t;
        t.num_cosets = live;
        t.action.assign(ngens_, std::vector<int>(live, -1));
        for (std::size_t i = 0; i < rep_.size(); ++i) {
            if (newid[i] < 0) continue;
            for (std::size_t g = 0; g < ngens_; ++g) {
                int im = table_[g][i];
                if (im < 0) throw std::runtime_error("coset enumeration: incomplete table");
                t.action[g][newid[i]] = newid[find(im)];
            }
        }
        return t;
    }

private:
    std::size_t find(std::size_t x) const {
        while (rep_[x] != x) x = rep_[x];
        return x;
    }

    std::size_t new_coset() {
        if (rep_.size() >= max_)
            throw std::runtime_error("coset enumeration: coset limit exceeded (quotient possibly infinite)");
        std::size_t beta = rep_.size();
        rep_.push_back(beta);
        for (auto& row : table_) row.push_back(-1);
        return beta;
    }

    void set_edge(std::size_t p, int g, std::size_t q) {
        table_[g][p] = int(q);
        table_[inv_[g]][q] = int(p);
    }

    void merge(std::size_t a, std::size_t b) {
        std::vector<std::pair<std::size_t, std::size_t>> queue = {{a, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            rep_[y] = x;
            for (std::size_t g = 0; g < ngens_; ++g) {
                int d = table_[g][y];
                if (d < 0) continue;
                table_[g][y] = -1;
                if (table_[inv_[g]][d] == int(y)) table_[inv_[g]][d] = -1;
                std::size_t u = find(x), v = find(d);
                if (table_[g][u] < 0 && table_[inv_[g]][v] < 0) {
                    set_edge(u, g, v);
                } else {
                    if (table_[g][u] >= 0) queue.push_back({std::size_t(table_[g][u]), v});
                    if (table_[inv_[g]][v] >= 0)
                        queue.push_back({std::size_t(table_[inv_[g]][v]), u});
                }
            }
        }
    }

    void scan_and_fill(std::size_t alpha, const std::vector<int>& w) {
        std::size_t f = alpha, b = alpha;
        int i = 0, j = int(w.size()) - 1;
        while (true) {
            while (i <= j && table_[w[i]][f] >= 0) f = find(table_[w[i]][f]), ++i;
            if (i > j) {
                if (f != b) merge(f, b);
                return;
            }
            while (j >= i && table_[inv_[w[j]]][b] >= 0) b = find(table_[inv_[w[j]]][b]), --j;
            if (j < i) {
                if (f != b) merge(f, b);
                return;
            }
            if (j == i) {
                set_edge(f, w[i], b);
                return;
            }
            std::size_t beta = new_coset();
            set_edge(f, w[i], beta);
            f = beta;
            ++i;
        }
    }

    std::size_t ngens_, max_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> table_;  // table_[g][coset]
    std::vector<std::size_t> rep_;
};

}  // namespace

CosetTable enumerate_quotient(const GroupPresentation& pres,
                              const std::vector<std::vector<int>>& extra_relators,
                              std::size_t max_cosets) {
    if (max_cosets < 1) throw std::invalid_argument("enumerate_quotient: max_cosets must be >= 1");
    std::vector<std::vector<int>> relators = pres.relators;
    for (const auto& w : extra_relators) {
        if (w.empty()) throw std::invalid_argument("enumerate_quotient: empty relator");
        for (int g : w)
            if (g < 0 || std::size_t(g) >= pres.num_generators)
                throw std::invalid_argument("enumerate_quotient: generator out of range");
        relators.push_back(w);
    }
    for (const auto& w : pres.relators)
        for (int g : w)
            if (g < 0 || std::size_t(g) >= pres.num_generators)
                throw std::invalid_argument("enumerate_quotient: generator out of range");
    if (!pres.inverse.empty()) {
        if (pres.inverse.size() != pres.num_generators)
            throw std::invalid_argument("enumerate_quotient: inverse map size mismatch");
        for (std::size_t g = 0; g < pres.num_generators; ++g) {
            int h = pres.inverse[g];
            if (h < 0 || std::size_t(h) >= pres.num_generators ||
                pres.inverse[h] != int(g))
                throw std::invalid_argument("enumerate_quotient: inverse map is not an involution");
        }
    }
    Enumerator en(pres.num_generators, pres.inverse, max_cosets);
    en.run(relators);
    return en.compact();
}

GroupPresentation rotation_group(int r, int s) {
    if (r < 3 || s < 3) throw std::invalid_argument("rotation_group: need r,s >= 3");
    GroupPresentation p;
    p.num_generators = 4;  // rho, rho^-1, sigma, sigma^-1
    p.inverse = {1, 0, 3, 2};
    std::vector<int> rr(std::size_t(r), 0), ss(std::size_t(s), 2);
    p.relators = {rr, ss, {0, 2, 0, 2}};
    return p;
}

std::vector<int> to_rotation_word(const std::vector<int>& word) {
    if (word.size() % 2 != 0)
        throw std::invalid_argument("to_rotation_word: word is orientation-reversing");
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < word.size(); i += 2) {
        int x = word[i], y = word[i + 1];
        if (x == y) continue;  // involution pair cancels
        if (x == 0 && y == 1) out.push_back(0);                          // ab = rho
        else if (x == 1 && y == 0) out.push_back(1);                     // ba = rho^-1
        else if (x == 1 && y == 2) out.push_back(2);                     // bc = sigma
        else if (x == 2 && y == 1) out.push_back(3);                     // cb = sigma^-1
        else if ((x == 0 && y == 2) || (x == 2 && y == 0)) {             // ac = rho sigma
            out.push_back(0);
            out.push_back(2);
        } else {
            throw std::invalid_argument("to_rotation_word: generator out of range");
        }
    }
    return out;
}

namespace {

bool words_fixed_point_free(const CosetTable& t, int ga, int gb, int gc, int r, int s) {
    std::vector<std::vector<int>> words = {{ga}, {gb}, {gc}};
    for (int i = 1; i < r; ++i) {
        std::vector<int> w;
        for (int k = 0; k < i; ++k) { w.push_back(ga); w.push_back(gb); }
        words.push_back(w);
    }
    for (int j = 1; j < s; ++j) {
        std::vector<int> w;
        for (int k = 0; k < j; ++k) { w.push_back(gb); w.push_back(gc); }
        words.push_back(w);
    }
    for (const auto& w : words)
        if (t.word_is_identity(w)) return false;
    return true;
}

std::vector<int> orbit_labels(const CosetTable& t, int g1, int g2, std::size_t& count) {
    std::vector<int> label(t.num_cosets, -1);
    count = 0;
    for (std::size_t start = 0; start < t.num_cosets; ++start) {
        if (label[start] >= 0) continue;
        std::vector<std::size_t> stack = {start};
        label[start] = int(count);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (int g : {g1, g2}) {
                std::size_t y = t.action[g][x];
                if (label[y] < 0) {
                    label[y] = int(count);
                    stack.push_back(y);
                }
            }
        }
        ++count;
    }
    return label;
}

ChainComplex surface_from_triple(const CosetTable& t, int ga, int gb, int gc, int r, int s,
                                 const std::string& family) {
    if (!words_fixed_point_free(t, ga, gb, gc, r, s))
        throw std::invalid_argument("build_surface_complex: action is not fixed-point free");
    std::size_t nf = 0, ne = 0, nv = 0;
    std::vector<int> face = orbit_labels(t, ga, gb, nf);
    std::vector<int> edge = orbit_labels(t, ga, gc, ne);
    std::vector<int> vert = orbit_labels(t, gb, gc, nv);
    // Each coset contributes one flag; a cell pair is incident when it shares
    // an odd number of edge-halves (two flags per half).
    std::map<std::pair<int, int>, std::size_t> fe, ve;
    for (std::size_t x = 0; x < t.num_cosets; ++x) {
        fe[{edge[x], face[x]}]++;
        ve[{vert[x], edge[x]}]++;
    }
    std::vector<std::pair<std::size_t, std::size_t>> d1, d2;
    for (auto& [k, c] : ve)
        if ((c / 2) % 2) d1.emplace_back(k.first, k.second);
    for (auto& [k, c] : fe)
        if ((c / 2) % 2) d2.emplace_back(k.first, k.second);
    ChainComplex out;
    out.dimension = 2;
    out.level_sizes = {nv, ne, nf};
    out.boundaries = {BitMatrix::from_entries(nv, ne, d1), BitMatrix::from_entries(ne, nf, d2)};
    out.family = family;
    out.params["r"] = std::to_string(r);
    out.params["s"] = std::to_string(s);
    return out;
}

}  // namespace

bool check_fixed_point_free(const CosetTable& table, int r, int s) {
    return words_fixed_point_free(table, 0, 1, 2, r, s);
}

bool check_fixed_point_free_rotation(const CosetTable& t, int r, int s) {
    std::vector<std::vector<int>> words = {{0, 2}};
    for (int i = 1; i < r; ++i) words.emplace_back(std::size_t(i), 0);
    for (int j = 1; j < s; ++j) words.emplace_back(std::size_t(j), 2);
    for (const auto& w : words)
        if (t.word_is_identity(w)) return false;
    return true;
}

ChainComplex build_surface_complex_rotation(const CosetTable& t, int r, int s) {
    if (!check_fixed_point_free_rotation(t, r, s))
        throw std::invalid_argument(
            "build_surface_complex_rotation: action is not fixed-point free");
    std::size_t nf = 0, nv = 0, ne = 0;
    std::vector<int> face = orbit_labels(t, 0, 1, nf);
    std::vector<int> vert = orbit_labels(t, 2, 3, nv);
    // Edge orbits under the half-turn rho*sigma.
    std::vector<int> edge(t.num_cosets, -1);
    for (std::size_t x = 0; x < t.num_cosets; ++x) {
        if (edge[x] >= 0) continue;
        edge[x] = int(ne);
        edge[t.apply(int(x), {0, 2})] = int(ne);
        ++ne;
    }
    // Each coset is one oriented flag; incidence is flag-sharing mod 2.
    std::map<std::pair<int, int>, std::size_t> fe, ve;
    for (std::size_t x = 0; x < t.num_cosets; ++x) {
        fe[{edge[x], face[x]}]++;
        ve[{vert[x], edge[x]}]++;
    }
    std::vector<std::pair<std::size_t, std::size_t>> d1, d2;
    for (auto& [k, c] : ve)
        if (c % 2) d1.emplace_back(k.first, k.second);
    for (auto& [k, c] : fe)
        if (c % 2) d2.emplace_back(k.first, k.second);
    ChainComplex out;
    out.dimension = 2;
    out.level_sizes = {nv, ne, nf};
    out.boundaries = {BitMatrix::from_entries(nv, ne, d1), BitMatrix::from_entries(ne, nf, d2)};
    out.family = "hyperbolic";
    out.params["r"] = std::to_string(r);
    out.params["s"] = std::to_string(s);
    out.params["proper"] = "1";
    return out;
}

ChainComplex build_surface_complex(const CosetTable& table, int r, int s) {
    return surface_from_triple(table, 0, 1, 2, r, s, "hyperbolic");
}

ChainComplex build_appendix_a_surface(int r, std::size_t L, std::size_t max_cosets) {
    if (r < 6 || r % 2 != 0)
        throw std::invalid_argument("build_appendix_a_surface: r must be even and >= 6");
    if (L < 2) throw std::invalid_argument("build_appendix_a_surface: L must be >= 2");
    int half = r / 2;
    int gx = r, gy = r + 1;
    GroupPresentation p;
    p.num_generators = std::size_t(r) + 2;
    for (int g = 0; g < r + 2; ++g) p.relators.push_back({g, g});
    {
        std::vector<int> xy;
        for (int i = 0; i < r; ++i) { xy.push_back(gx); xy.push_back(gy); }
        p.relators.push_back(xy);
    }
    for (int i = 1; i <= half; ++i) {
        std::vector<int> w;
        for (std::size_t k = 0; k < L; ++k) { w.push_back(i - 1); w.push_back(i + half - 1); }
        p.relators.push_back(w);
    }
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            if (j - i == half) continue;
            p.relators.push_back({i - 1, j - 1, i - 1, j - 1});
        }
    auto wrap = [r](int i) { return (i - 1 + r) % r + 1; };
    for (int i = 1; i <= r; ++i) {
        p.relators.push_back({gx, i - 1, gx, wrap(r - i + 1) - 1});
        p.relators.push_back({gy, i - 1, gy, wrap(r - i + 2) - 1});
    }
    CosetTable t = enumerate_quotient(p, {}, max_cosets);
    ChainComplex c = surface_from_triple(t, 0, gx, gy, 4, r, "appendix-a");
    c.params["r"] = std::to_string(r);
    c.params["L"] = std::to_string(L);
    c.params.erase("s");
    return c;
}

namespace {

class WordParser {
public:
    explicit WordParser(const std::string& s) : s_(s) {}

    std::vector<int> parse() {
        std::vector<int> w = seq();
        skip_ws();
        if (pos_ != s_.size()) throw std::invalid_argument("relator word: trailing input");
        if (w.empty()) throw std::invalid_argument("relator word: empty word");
        return w;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::vector<int> seq() {
        std::vector<int> out;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] == ')') break;
            std::vector<int> part = atom();
            skip_ws();
            long exp = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip_ws();
                bool neg = false;
                if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                    neg = s_[pos_] == '-';
                    ++pos_;
                }
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw std::invalid_argument("relator word: malformed exponent");
                exp = 0;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    exp = exp * 10 + (s_[pos_++] - '0');
                if (neg) exp = -exp;
            }
            if (exp < 0) {
                // All letters are involutions after rewriting, so the inverse
                // of a word is its reverse.
                std::reverse(part.begin(), part.end());
                exp = -exp;
            }
            for (long k = 0; k < exp; ++k) out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }

    std::vector<int> atom() {
        char ch = s_[pos_];
        switch (ch) {
            case 'a': ++pos_; return {0};
            case 'b': ++pos_; return {1};
            case 'c': ++pos_; return {2};
            case 'r': ++pos_; return {0, 1};
            case 'R': ++pos_; return {1, 0};
            case 's': ++pos_; return {1, 2};
            case 'S': ++pos_; return {2, 1};
            case '(': {
                ++pos_;
                std::vector<int> inner = seq();
                skip_ws();
                if (pos_ >= s_.size() || s_[pos_] != ')')
                    throw std::invalid_argument("relator word: unbalanced parenthesis");
                ++pos_;
                return inner;
            }
            default:
                throw std::invalid_argument(std::string("relator word: unexpected character '") +
                                            ch + "'");
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<int> parse_relator_word(const std::string& text) {
    return WordParser(text).parse();
}

std::vector<std::vector<int>> parse_relator_list(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_relator_word(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace hqc
