#include "vca/drawing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace vca {

namespace {

std::vector<int> positions_of(const std::vector<int>& perm, int n) {
    std::vector<int> pos(n, -1);
    for (size_t p = 0; p < perm.size(); ++p) pos[perm[p]] = static_cast<int>(p);
    return pos;
}

// Hopcroft-Karp maximum matching on an explicit bipartite adjacency.
int max_matching(const std::vector<std::vector<int>>& adj, int nb) {
    int na = static_cast<int>(adj.size());
    std::vector<int> match_a(na, -1), match_b(nb, -1), dist(na);
    const int INF = std::numeric_limits<int>::max();
    int result = 0;
    for (;;) {
        std::vector<int> q;
        for (int u = 0; u < na; ++u) {
            dist[u] = (match_a[u] == -1) ? 0 : INF;
            if (dist[u] == 0) q.push_back(u);
        }
        bool found = false;
        for (size_t head = 0; head < q.size(); ++head) {
            int u = q[head];
            for (int v : adj[u]) {
                int w = match_b[v];
                if (w == -1)
                    found = true;
                else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        if (!found) break;
        auto try_kuhn = [&](auto&& self, int u) -> bool {
            for (int v : adj[u]) {
                int w = match_b[v];
                if (w == -1 || (dist[w] == dist[u] + 1 && self(self, w))) {
                    match_a[u] = v;
                    match_b[v] = u;
                    return true;
                }
            }
            dist[u] = INF;
            return false;
        };
        for (int u = 0; u < na; ++u)
            if (match_a[u] == -1 && try_kuhn(try_kuhn, u)) ++result;
    }
    return result;
}

// Ordered-matching search on one connected component.
struct ComponentSearch {
    const BipartiteGraph& g;
    std::vector<int> top;     // smaller side, ascending ids
    std::vector<int> bottom;  // larger side, ascending ids
    std::vector<char> used_top, used_bottom;  // indexed by vertex id
    std::vector<char> blocked_top;            // top vertex adjacent to a used bottom
    std::vector<std::pair<int, int>> seq, best_seq;
    uint64_t nodes = 0, prunes = 0;

    ComponentSearch(const BipartiteGraph& graph, const std::vector<int>& verts)
        : g(graph) {
        std::vector<int> sa, sb;
        for (int v : verts) (g.in_a(v) ? sa : sb).push_back(v);
        if (sa.size() <= sb.size()) {
            top = sa;
            bottom = sb;
        } else {
            top = sb;
            bottom = sa;
        }
        int n = g.vertex_count();
        used_top.assign(n, 0);
        used_bottom.assign(n, 0);
        blocked_top.assign(n, 0);
    }

    bool is_top(int v) const {
        return std::binary_search(top.begin(), top.end(), v);
    }

    int bound() const {
        // any extension of the sequence is a matching on the still-eligible
        // vertices, so residual maximum matching is an admissible bound
        std::vector<int> tops, bots;
        for (int u : top)
            if (!used_top[u] && !blocked_top[u]) tops.push_back(u);
        std::vector<int> bot_index(g.vertex_count(), -1);
        for (int v : bottom)
            if (!used_bottom[v]) {
                bot_index[v] = static_cast<int>(bots.size());
                bots.push_back(v);
            }
        std::vector<std::vector<int>> adj(tops.size());
        for (size_t i = 0; i < tops.size(); ++i)
            for (int v : g.neighbors(tops[i]))
                if (bot_index[v] != -1) adj[i].push_back(bot_index[v]);
        return max_matching(adj, static_cast<int>(bots.size()));
    }

    void dfs() {
        ++nodes;
        if (seq.size() > best_seq.size()) best_seq = seq;
        if (seq.size() + bound() <= best_seq.size()) {
            ++prunes;
            return;
        }
        for (int u : top) {
            if (used_top[u] || blocked_top[u]) continue;
            for (int v : g.neighbors(u)) {
                if (used_bottom[v]) continue;
                push(u, v);
                dfs();
                pop(u, v);
            }
        }
    }

    void push(int u, int v) {
        seq.emplace_back(u, v);
        used_top[u] = 1;
        used_bottom[v] = 1;
        for (int w : g.neighbors(v))
            if (is_top(w)) ++blocked_top[w];  // reuse as a counter
    }

    void pop(int u, int v) {
        seq.pop_back();
        used_top[u] = 0;
        used_bottom[v] = 0;
        for (int w : g.neighbors(v))
            if (is_top(w)) --blocked_top[w];
    }

    StandardDrawing materialize() const {
        StandardDrawing d;
        std::vector<char> in_seq_top(g.vertex_count(), 0), in_seq_bottom(g.vertex_count(), 0);
        for (auto [u, v] : best_seq) {
            d.sigma.push_back(u);
            d.tau.push_back(v);
            in_seq_top[u] = 1;
            in_seq_bottom[v] = 1;
        }
        for (int u : top)
            if (!in_seq_top[u]) d.sigma.push_back(u);
        for (int v : bottom)
            if (!in_seq_bottom[v]) d.tau.push_back(v);
        return d;
    }
};

}  // namespace

EdgeClass classify_edge(const StandardDrawing& d, int u, int v) {
    int n = 0;
    for (int x : d.sigma) n = std::max(n, x + 1);
    for (int x : d.tau) n = std::max(n, x + 1);
    std::vector<int> spos(n, -1), tpos(n, -1);
    for (size_t p = 0; p < d.sigma.size(); ++p) spos[d.sigma[p]] = static_cast<int>(p);
    for (size_t p = 0; p < d.tau.size(); ++p) tpos[d.tau[p]] = static_cast<int>(p);
    int i = spos[u], j = tpos[v];
    if (i < 0 || j < 0) throw PositionOutOfRange("edge endpoint not in drawing");
    if (i == j) return EdgeClass::Vertical;
    return i > j ? EdgeClass::Slash : EdgeClass::Backslash;
}

int r_of(const BipartiteGraph& g, const StandardDrawing& d) {
    auto tpos = positions_of(d.tau, g.vertex_count());
    int limit = static_cast<int>(std::min(d.sigma.size(), d.tau.size()));
    int r = 0;
    for (int t = 0; t < limit; ++t) {
        int u = d.sigma[t];
        if (!g.has_edge(u, d.tau[t])) break;
        bool slash_before = false;
        for (int v : g.neighbors(u))
            if (tpos[v] >= 0 && tpos[v] < t) {
                slash_before = true;
                break;
            }
        if (slash_before) break;
        r = t + 1;
    }
    return r;
}

GdimResult gdim(const BipartiteGraph& g) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    GdimResult res;
    bool first = true;
    for (int c = 0; c < g.component_count(); ++c) {
        auto verts = g.component_vertices(c);
        bool has_edge = false;
        for (int v : verts)
            if (!g.is_isolated(v)) {
                has_edge = true;
                break;
            }
        if (!has_edge) continue;  // isolated vertices contribute nothing
        ComponentSearch search(g, verts);
        search.dfs();
        int comp_gdim = static_cast<int>(search.best_seq.size()) + 1;
        res.component_gdims.push_back(comp_gdim);
        res.nodes += search.nodes;
        res.prunes += search.prunes;
        if (first) {
            res.witness = search.materialize();
            res.sequence = search.best_seq;
            first = false;
        }
    }
    int m = static_cast<int>(res.component_gdims.size());
    res.gdim = 1 - m + std::accumulate(res.component_gdims.begin(),
                                       res.component_gdims.end(), 0);
    return res;
}

Cover descending_sequence_to_cover(const BipartiteGraph& g, const StandardDrawing& d,
                                   const std::vector<int>& omega, int k) {
    int r = r_of(g, d);
    if (static_cast<int>(omega.size()) != r)
        throw InvalidParameters("omega length must equal r of the drawing");
    for (size_t i = 0; i + 1 < omega.size(); ++i)
        if (omega[i] < omega[i + 1]) throw NotDescending("omega must be weakly descending");
    for (int w : omega)
        if (w < 0 || w > k) throw InvalidParameters("omega entries must lie in 0..k");

    auto tpos = positions_of(d.tau, g.vertex_count());
    auto spos = positions_of(d.sigma, g.vertex_count());
    int a = static_cast<int>(d.sigma.size()), b = static_cast<int>(d.tau.size());
    // eligibility: every late top position reaches an early bottom position
    // and vice versa
    for (int i = r; i < a; ++i) {
        bool ok = false;
        for (int v : g.neighbors(d.sigma[i]))
            if (tpos[v] >= 0 && tpos[v] < r) ok = true;
        if (!ok) throw DrawingNotEligible("top position " + std::to_string(i + 1) +
                                          " has no early bottom neighbor");
    }
    for (int j = r; j < b; ++j) {
        bool ok = false;
        for (int u : g.neighbors(d.tau[j]))
            if (spos[u] >= 0 && spos[u] < r) ok = true;
        if (!ok) throw DrawingNotEligible("bottom position " + std::to_string(j + 1) +
                                          " has no early top neighbor");
    }

    Cover c;
    c.k = k;
    c.values.assign(g.vertex_count(), 0);
    for (int i = 0; i < r; ++i) {
        c.values[d.sigma[i]] = omega[i];
        c.values[d.tau[i]] = k - omega[i];
    }
    for (int i = r; i < a; ++i) {
        int m = std::numeric_limits<int>::max();
        for (int v : g.neighbors(d.sigma[i]))
            if (tpos[v] >= 0 && tpos[v] < r) m = std::min(m, tpos[v]);
        c.values[d.sigma[i]] = omega[m];
    }
    for (int j = r; j < b; ++j) {
        int mn = std::numeric_limits<int>::max();
        for (int u : g.neighbors(d.tau[j])) mn = std::min(mn, c.values[u]);
        c.values[d.tau[j]] = k - mn;
    }
    if (!is_cover(g, c) || !is_basic(g, c))
        throw Error("descending-sequence construction produced a non-basic cover; "
                    "this indicates a bug");
    return c;
}

bool saw_connected(const BipartiteGraph& g, const StandardDrawing& d, int i, int j) {
    int r = r_of(g, d);
    if (i < 0 || j < 0 || i >= r || j >= r)
        throw PositionOutOfRange("saw_connected positions must be < r");
    if (i > j) return false;
    if (i == j) return true;
    // reach[p]: position i connects to p via increasing backslash edges
    std::vector<char> reach(r, 0);
    reach[i] = 1;
    for (int p = i; p < j; ++p) {
        if (!reach[p]) continue;
        for (int v : g.neighbors(d.sigma[p])) {
            // backslash edge {p, q'} with q > p
            for (int q = p + 1; q <= j; ++q)
                if (d.tau[q] == v) reach[q] = 1;
        }
    }
    return reach[j] != 0;
}

TreeDimResult tree_dim(const BipartiteGraph& t) {
    if (!t.is_tree()) throw NotATree("tree_dim requires a connected acyclic graph");
    GdimResult gd = gdim(t);
    TreeDimResult res;
    res.dim = gd.gdim;
    int r = gd.gdim - 1;
    int a = static_cast<int>(std::min(t.a_side().size(), t.b_side().size()));
    unsigned long long bound = 1;
    if (r == a) {
        // the value-set count degenerates: at most (k+1)^a vectors, so e <= r!
        for (int i = 2; i <= r; ++i) bound *= static_cast<unsigned long long>(i);
    } else {
        for (int i = 0; i < r; ++i) bound *= static_cast<unsigned long long>(a - r);
        for (int i = 0; i < r; ++i) bound *= static_cast<unsigned long long>(a - i);
    }
    res.multiplicity_bound = bound;
    return res;
}

namespace {

// Like the gdim search but only accepts maximum-length sequences whose unused
// vertices are all leaves.
struct LeavesRightSearch : ComponentSearch {
    int target;
    bool done = false;

    LeavesRightSearch(const BipartiteGraph& graph, const std::vector<int>& verts, int t)
        : ComponentSearch(graph, verts), target(t) {}

    bool all_unused_are_leaves() const {
        for (int u : top)
            if (!used_top[u] && g.degree(u) != 1) return false;
        for (int v : bottom)
            if (!used_bottom[v] && g.degree(v) != 1) return false;
        return true;
    }

    void dfs2() {
        if (done) return;
        if (static_cast<int>(seq.size()) == target) {
            if (all_unused_are_leaves()) {
                best_seq = seq;
                done = true;
            }
            return;
        }
        if (static_cast<int>(seq.size()) + bound() < target) return;
        for (int u : top) {
            if (used_top[u] || blocked_top[u]) continue;
            for (int v : g.neighbors(u)) {
                if (used_bottom[v]) continue;
                push(u, v);
                dfs2();
                pop(u, v);
                if (done) return;
            }
        }
    }
};

}  // namespace

StandardDrawing tree_optimal_leaves_right(const BipartiteGraph& t) {
    if (!t.is_tree()) throw NotATree("requires a connected acyclic graph");
    GdimResult gd = gdim(t);
    int r = gd.gdim - 1;
    std::vector<int> verts(t.vertex_count());
    std::iota(verts.begin(), verts.end(), 0);
    LeavesRightSearch search(t, verts, r);
    search.dfs2();
    if (!search.done)
        throw Error("no optimal leaves-right drawing found; existence is guaranteed, "
                    "so this indicates a bug");
    StandardDrawing d = search.materialize();
    if (r_of(t, d) != r)
        throw Error("leaves-right drawing is not optimal; this indicates a bug");
    // optimality criterion: bottom targets of left-crossing edges are never
    // saw-connected to top sources of right-crossing edges
    auto spos = positions_of(d.sigma, t.vertex_count());
    auto tpos = positions_of(d.tau, t.vertex_count());
    std::vector<int> from_top, from_bottom;  // early positions hit by crossing edges
    for (auto [u, v] : t.edges()) {
        int iu = spos[u] >= 0 ? spos[u] : spos[v];
        int jv = tpos[v] >= 0 ? tpos[v] : tpos[u];
        if (iu >= r && jv < r) from_top.push_back(jv);     // {i, j'}, i > r
        if (jv >= r && iu < r) from_bottom.push_back(iu);  // {k, h'}, h > r
    }
    for (int j : from_top)
        for (int k : from_bottom)
            if (j <= k && saw_connected(t, d, j, k))
                throw Error("optimality criterion violated by leaves-right drawing; "
                            "this indicates a bug");
    return d;
}

std::string render_drawing(const BipartiteGraph& g, const StandardDrawing& d) {
    auto spos = positions_of(d.sigma, g.vertex_count());
    auto tpos = positions_of(d.tau, g.vertex_count());
    std::ostringstream out;
    out << "A:";
    for (int u : d.sigma) out << " " << u + 1;
    out << "\nB:";
    for (int v : d.tau) out << " " << v + 1;
    out << "\nedges:";
    for (auto [u, v] : g.edges()) {
        int top = g.in_a(u) == g.in_a(d.sigma.empty() ? u : d.sigma[0]) ? u : v;
        (void)top;
        int i = spos[u] >= 0 ? spos[u] : spos[v];
        int j = tpos[v] >= 0 ? tpos[v] : tpos[u];
        char mark = (i == j) ? '|' : (i > j ? '/' : '\\');
        out << " " << u + 1 << mark << v + 1;
    }
    out << "\nr: " << r_of(g, d) << "\n";
    return out.str();
}

}  // namespace vca
