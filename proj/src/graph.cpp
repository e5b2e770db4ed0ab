#include "vca/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace vca {

BipartiteGraph BipartiteGraph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n <= 0) throw InvalidParameters("vertex count must be positive");
    BipartiteGraph g;
    g.n_ = n;
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidVertexId("vertex id out of range: " + std::to_string(std::max(u, v) + 1));
        if (u == v) throw InvalidVertexId("self loop at vertex " + std::to_string(u + 1));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    g.edges_ = std::move(edge_list);

    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    size_t words = (static_cast<size_t>(n) * n + 63) / 64;
    g.adj_bits_.assign(words, 0);
    auto set_bit = [&](int u, int v) {
        size_t idx = static_cast<size_t>(u) * n + v;
        g.adj_bits_[idx >> 6] |= 1ULL << (idx & 63);
    };
    for (auto [u, v] : g.edges_) {
        set_bit(u, v);
        set_bit(v, u);
    }

    // 2-coloring by BFS; on an odd cycle, rebuild one witness via parents.
    std::vector<int> color(n, -1), parent(n, -1);
    g.comp_.assign(n, -1);
    g.comp_count_ = 0;
    long long tree_edges = 0;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        int c = g.comp_count_++;
        color[s] = 0;
        g.comp_[s] = c;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.adj_[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    g.comp_[v] = c;
                    ++tree_edges;
                    q.push_back(v);
                } else if (color[v] == color[u]) {
                    // walk both endpoints up to their common ancestor
                    std::vector<int> pu{u}, pv{v};
                    for (int x = u; parent[x] != -1; x = parent[x]) pu.push_back(parent[x]);
                    for (int x = v; parent[x] != -1; x = parent[x]) pv.push_back(parent[x]);
                    int i = static_cast<int>(pu.size()) - 1, j = static_cast<int>(pv.size()) - 1;
                    while (i > 0 && j > 0 && pu[i - 1] == pv[j - 1]) {
                        --i;
                        --j;
                    }
                    std::vector<int> cycle(pu.begin(), pu.begin() + i + 1);
                    for (int t = j - 1; t >= 0; --t) cycle.push_back(pv[t]);
                    for (int& x : cycle) ++x;  // report 1-based
                    throw NotBipartite("odd cycle found", std::move(cycle));
                }
            }
        }
    }
    g.acyclic_ = (tree_edges == static_cast<long long>(g.edges_.size()));

    // Per component: A-side is the side of the component's smallest vertex.
    // Then flip whole components, biggest imbalance first, until |A| <= |B|;
    // on a global tie, vertex 0's side becomes A.
    std::vector<char> comp_flip(g.comp_count_, 0);
    std::vector<int> comp_diff(g.comp_count_, 0);  // |A_c| - |B_c| under default choice
    std::vector<int> comp_min(g.comp_count_, -1);
    for (int v = 0; v < n; ++v)
        if (comp_min[g.comp_[v]] == -1) comp_min[g.comp_[v]] = v;
    auto side_of = [&](int v) {
        int c = g.comp_[v];
        char s = (color[v] == color[comp_min[c]]) ? 0 : 1;
        return comp_flip[c] ? static_cast<char>(1 - s) : s;
    };
    for (int v = 0; v < n; ++v) comp_diff[g.comp_[v]] += (side_of(v) == 0) ? 1 : -1;
    int total = std::accumulate(comp_diff.begin(), comp_diff.end(), 0);
    if (total > 0) {
        std::vector<int> order(g.comp_count_);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (comp_diff[x] != comp_diff[y]) return comp_diff[x] > comp_diff[y];
            return x < y;
        });
        for (int c : order) {
            if (total <= 0) break;
            if (comp_diff[c] <= 0) break;
            comp_flip[c] = 1;
            total -= 2 * comp_diff[c];
        }
    }
    g.side_.assign(n, 0);
    int a_count = 0;
    for (int v = 0; v < n; ++v) {
        g.side_[v] = side_of(v);
        a_count += (g.side_[v] == 0) ? 1 : 0;
    }
    if (2 * a_count == n && g.side_[0] == 1)
        for (int v = 0; v < n; ++v) g.side_[v] = 1 - g.side_[v];
    return g;
}

bool BipartiteGraph::has_edge(int u, int v) const {
    size_t idx = static_cast<size_t>(u) * n_ + v;
    return (adj_bits_[idx >> 6] >> (idx & 63)) & 1ULL;
}

std::vector<int> BipartiteGraph::a_side() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (side_[v] == 0) out.push_back(v);
    return out;
}

std::vector<int> BipartiteGraph::b_side() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (side_[v] == 1) out.push_back(v);
    return out;
}

std::vector<int> BipartiteGraph::component_vertices(int c) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (comp_[v] == c) out.push_back(v);
    return out;
}

StripResult strip_isolated(const BipartiteGraph& g) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    StripResult res;
    res.new_id.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_isolated(v)) {
            res.removed.push_back(v);
        } else {
            res.new_id[v] = static_cast<int>(res.old_id.size());
            res.old_id.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(res.new_id[u], res.new_id[v]);
    res.graph = BipartiteGraph::from_edges(static_cast<int>(res.old_id.size()), std::move(edges));
    return res;
}

// ---- generators ----------------------------------------------------------

BipartiteGraph make_cycle(int len) {
    if (len < 4 || len % 2 != 0) throw InvalidParameters("cycle length must be even and >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    return BipartiteGraph::from_edges(len, std::move(edges));
}

BipartiteGraph make_path(int n) {
    if (n < 2) throw InvalidParameters("path needs at least 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return BipartiteGraph::from_edges(n, std::move(edges));
}

BipartiteGraph make_complete(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParameters("complete bipartite sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return BipartiteGraph::from_edges(a + b, std::move(edges));
}

BipartiteGraph make_caterpillar(int r, int a, int b) {
    if (!(2 <= r && r <= a && a <= b))
        throw InvalidParameters("caterpillar needs 2 <= r <= a <= b");
    // Alternating path on 2r-2 vertices; b-r+1 pendant leaves on the left
    // endpoint, a-r+1 on the right endpoint. Total a+b vertices.
    int spine = 2 * r - 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    int next = spine;
    for (int i = 0; i < b - r + 1; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < a - r + 1; ++i) edges.emplace_back(spine - 1, next++);
    return BipartiteGraph::from_edges(a + b, std::move(edges));
}

BipartiteGraph make_regular(int a) {
    if (a < 2) throw InvalidParameters("regular family needs a >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (i != j) edges.emplace_back(i, a + j);
    return BipartiteGraph::from_edges(2 * a, std::move(edges));
}

BipartiteGraph whisker(const BipartiteGraph& base_tree) {
    int m = base_tree.vertex_count();
    if (m < 1) throw InvalidParameters("whisker base must be nonempty");
    std::vector<std::pair<int, int>> edges = base_tree.edges();
    for (int v = 0; v < m; ++v) edges.emplace_back(v, m + v);
    return BipartiteGraph::from_edges(2 * m, std::move(edges));
}

BipartiteGraph poset_graph(const FinitePoset& p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.m; ++j)
            if (p.less_eq(i, j)) edges.emplace_back(i, p.m + j);
    return BipartiteGraph::from_edges(2 * p.m, std::move(edges));
}

BipartiteGraph random_bipartite(int a, int b, double p, uint64_t seed) {
    if (a < 1 || b < 1 || p < 0.0 || p > 1.0)
        throw InvalidParameters("random bipartite needs a,b >= 1 and p in [0,1]");
    uint64_t state = seed;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, a + j);
        }
    return BipartiteGraph::from_edges(a + b, std::move(edges));
}

BipartiteGraph random_tree(int n, uint64_t seed) {
    if (n < 2) throw InvalidParameters("random tree needs n >= 2");
    uint64_t state = seed;
    std::vector<std::pair<int, int>> edges;
    // random attachment: vertex i hangs off a uniform earlier vertex
    for (int i = 1; i < n; ++i) {
        int p = static_cast<int>(splitmix64(state) % static_cast<uint64_t>(i));
        edges.emplace_back(p, i);
    }
    return BipartiteGraph::from_edges(n, std::move(edges));
}

BipartiteGraph disjoint_union(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    int n1 = g1.vertex_count();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(n1 + u, n1 + v);
    return BipartiteGraph::from_edges(n1 + g2.vertex_count(), std::move(edges));
}

BipartiteGraph generate(const std::string& spec) {
    std::istringstream in(spec);
    std::string family;
    if (!(in >> family)) throw InvalidParameters("empty generator spec");
    auto need_int = [&](const char* what) {
        long long v;
        if (!(in >> v)) throw InvalidParameters(std::string("generator needs ") + what);
        return static_cast<int>(v);
    };
    if (family == "cycle") return make_cycle(need_int("length"));
    if (family == "path") return make_path(need_int("vertex count"));
    if (family == "complete") {
        int a = need_int("a");
        return make_complete(a, need_int("b"));
    }
    if (family == "caterpillar") {
        int r = need_int("r"), a = need_int("a");
        return make_caterpillar(r, a, need_int("b"));
    }
    if (family == "regular") return make_regular(need_int("a"));
    if (family == "whisker-path") return whisker(make_path(need_int("base path length")));
    if (family == "star") return make_complete(1, need_int("leaf count"));
    if (family == "random") {
        int a = need_int("a"), b = need_int("b");
        double p;
        if (!(in >> p)) throw InvalidParameters("generator needs edge probability");
        uint64_t seed;
        if (!(in >> seed)) throw InvalidParameters("generator needs seed");
        return random_bipartite(a, b, p, seed);
    }
    if (family == "random-tree") {
        int n = need_int("n");
        uint64_t seed;
        if (!(in >> seed)) throw InvalidParameters("generator needs seed");
        return random_tree(n, seed);
    }
    throw InvalidParameters("unknown graph family: " + family);
}

// ---- text format ---------------------------------------------------------

BipartiteGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "n") {
            if (n != -1) throw ParseError("duplicate 'n' line at line " + std::to_string(lineno));
            if (!(ls >> n) || n <= 0) throw ParseError("bad vertex count at line " + std::to_string(lineno));
        } else if (tag == "e") {
            if (n == -1) throw ParseError("'e' before 'n' at line " + std::to_string(lineno));
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("bad edge at line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex out of range at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("unknown line tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (n == -1) throw ParseError("missing 'n' line");
    return BipartiteGraph::from_edges(n, std::move(edges));
}

std::string write_graph(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

bool isomorphic_brute(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    auto deg_seq = [](const BipartiteGraph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (deg_seq(g1) != deg_seq(g2)) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : g1.edges())
            if (!g2.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---- poset ---------------------------------------------------------------

FinitePoset FinitePoset::from_relations(int m, const std::vector<std::pair<int, int>>& rels) {
    if (m < 0) throw InvalidParameters("poset size must be nonnegative");
    FinitePoset p;
    p.m = m;
    p.leq.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i) p.leq[i][i] = 1;
    for (auto [i, j] : rels) {
        if (i < 0 || i >= m || j < 0 || j >= m)
            throw InvalidParameters("poset relation out of range");
        p.leq[i][j] = 1;
    }
    for (int k = 0; k < m; ++k)  // transitive closure
        for (int i = 0; i < m; ++i)
            if (p.leq[i][k])
                for (int j = 0; j < m; ++j)
                    if (p.leq[k][j]) p.leq[i][j] = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (p.leq[i][j] && p.leq[j][i])
                throw InvalidParameters("poset relation is not antisymmetric");
    return p;
}

int FinitePoset::height() const {
    std::vector<int> h(m, 0);
    // longest chain ending at each element; process in a linear extension
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int cx = 0, cy = 0;
        for (int z = 0; z < m; ++z) {
            cx += leq[z][x];
            cy += leq[z][y];
        }
        if (cx != cy) return cx < cy;
        return x < y;
    });
    int best = 0;
    for (int x : order) {
        h[x] = 1;
        for (int z = 0; z < m; ++z)
            if (z != x && leq[z][x]) h[x] = std::max(h[x], h[z] + 1);
        best = std::max(best, h[x]);
    }
    return best;
}

bool FinitePoset::is_pure() const {
    if (m == 0) return true;
    // depth-first over saturated chains from minimal elements
    std::vector<std::vector<int>> covers_up(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool covering = true;
            for (int z = 0; z < m; ++z)
                if (z != i && z != j && leq[i][z] && leq[z][j]) {
                    covering = false;
                    break;
                }
            if (covering) covers_up[i].push_back(j);
        }
    std::vector<int> is_min(m, 1), chain_len;
    for (int i = 0; i < m; ++i)
        for (int j : covers_up[i]) is_min[j] = 0;
    int expected = -1;
    auto dfs = [&](auto&& self, int x, int len) -> bool {
        if (covers_up[x].empty()) {
            if (expected == -1) expected = len;
            return expected == len;
        }
        for (int j : covers_up[x])
            if (!self(self, j, len + 1)) return false;
        return true;
    };
    for (int i = 0; i < m; ++i)
        if (is_min[i] && !dfs(dfs, i, 1)) return false;
    return true;
}

}  // namespace vca
