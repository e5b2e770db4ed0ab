#include "vca/algebra.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "vca/drawing.hpp"
#include "vca/lattice.hpp"

namespace vca {

HilbertProfile hilbert_function(const BipartiteGraph& g, int kmax, int workers) {
    if (kmax < 1) throw InvalidParameters("kmax must be >= 1");
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    HilbertProfile p;
    p.kmax = kmax;
    p.counts.resize(kmax);
    if (workers > 1) {
        std::vector<std::future<long long>> futs;
        for (int k = 1; k <= kmax; ++k)
            futs.push_back(std::async(std::launch::async, [&g, k] {
                return static_cast<long long>(enumerate_basic(g, k).count());
            }));
        for (int k = 1; k <= kmax; ++k) p.counts[k - 1] = futs[k - 1].get();
    } else {
        for (int k = 1; k <= kmax; ++k)
            p.counts[k - 1] = enumerate_basic(g, k).count();
    }
    // smallest d whose trailing d-th differences are constant over the window
    for (int d = 0; kmax - d >= p.window; ++d) {
        std::vector<long long> seq = p.counts;
        for (int t = 0; t < d; ++t) {
            std::vector<long long> next(seq.size() - 1);
            for (size_t i = 0; i + 1 < seq.size(); ++i) next[i] = seq[i + 1] - seq[i];
            seq = std::move(next);
        }
        size_t m = seq.size();
        if (seq[m - 1] == seq[m - 2] && seq[m - 2] == seq[m - 3]) {
            p.stable = true;
            p.stabilized_degree = d;
            p.dim = d + 1;
            p.multiplicity = seq[m - 1];
            break;
        }
    }
    return p;
}

namespace {

// condition (II): every neighbor of i is adjacent to every neighbor of j
bool square_form(const BipartiteGraph& g, int i, int j) {
    for (int ip : g.neighbors(i))
        for (int jp : g.neighbors(j))
            if (!g.has_edge(ip, jp)) return false;
    return true;
}

}  // namespace

WscResult satisfies_wsc(const BipartiteGraph& g) {
    WscResult res;
    res.witness_edge.assign(g.vertex_count(), -1);
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (g.is_isolated(i)) continue;
        int found = -1;
        for (int j : g.neighbors(i))
            if (square_form(g, i, j)) {
                found = j;
                break;
            }
        if (found == -1) {
            res.holds = false;
            res.violating_vertex = i;
            res.witness_edge.clear();
            return res;
        }
        res.witness_edge[i] = found;
    }
    res.holds = true;
    return res;
}

bool domain_criterion_via_covers(const BipartiteGraph& g) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    const CoverSet ones = enumerate_basic(g, 1);
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (g.is_isolated(i)) continue;
        bool has_tight = false;
        for (int j : g.neighbors(i)) {
            bool tight_everywhere = true;
            for (const Cover& c : ones.covers)
                if (c.values[i] + c.values[j] != 1) {
                    tight_everywhere = false;
                    break;
                }
            if (tight_everywhere) {
                has_tight = true;
                break;
            }
        }
        if (!has_tight) return false;
    }
    return true;
}

std::optional<std::vector<Cover>> zero_divisor_witness(const BipartiteGraph& g, int m_max) {
    if (m_max < 2) throw InvalidParameters("m_max must be >= 2");
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    const CoverSet ones = enumerate_basic(g, 1);
    std::vector<int> pick;
    // non-decreasing index tuples = multisets, lexicographic
    auto dfs = [&](auto&& self, int m, int start) -> bool {
        if (m == 0) {
            Cover s = ones.covers[pick[0]];
            for (size_t t = 1; t < pick.size(); ++t) s = sum(s, ones.covers[pick[t]]);
            return !is_basic(g, s);
        }
        for (int idx = start; idx < ones.count(); ++idx) {
            pick.push_back(idx);
            if (self(self, m - 1, idx)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int m = 2; m <= m_max; ++m) {
        pick.clear();
        if (dfs(dfs, m, 0)) {
            std::vector<Cover> out;
            for (int idx : pick) out.push_back(ones.covers[idx]);
            return out;
        }
    }
    return std::nullopt;
}

bool is_unmixed(const BipartiteGraph& g) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    const CoverSet ones = enumerate_basic(g, 1);
    int s = -1;
    for (const Cover& c : ones.covers) {
        int total = std::accumulate(c.values.begin(), c.values.end(), 0);
        if (s == -1) s = total;
        if (total != s) return false;
    }
    return true;
}

bool tree_domain_test(const BipartiteGraph& t) {
    if (!t.is_tree()) throw NotATree("tree_domain_test requires a connected acyclic graph");
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (t.degree(v) == 1) continue;
        bool near_leaf = false;
        for (int u : t.neighbors(v))
            if (t.degree(u) == 1) {
                near_leaf = true;
                break;
            }
        if (!near_leaf) return false;
    }
    return true;
}

bool tree_unmixed_test(const BipartiteGraph& t) {
    if (!t.is_tree()) throw NotATree("tree_unmixed_test requires a connected acyclic graph");
    int n = t.vertex_count();
    if (n % 2 != 0) return false;
    if (n == 2) return true;
    // whisker tree: exactly n/2 leaves, one hanging off each internal vertex
    int leaves = 0;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 1) ++leaves;
    if (leaves != n / 2) return false;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) == 1) continue;
        int leaf_neighbors = 0;
        for (int u : t.neighbors(v))
            if (t.degree(u) == 1) ++leaf_neighbors;
        if (leaf_neighbors != 1) return false;
    }
    return true;
}

bool always_tight_edge(const BipartiteGraph& g, int i, int j) {
    if (!g.has_edge(i, j)) throw NotAnEdge("always_tight_edge requires an edge");
    return square_form(g, i, j);
}

bool nonzerodivisor_test(const BipartiteGraph& g, const Cover& b) {
    if (!is_cover(g, b) || !is_basic(g, b)) throw NotBasic("not a basic cover");
    for (auto [i, j] : g.edges()) {
        if (b.values[i] + b.values[j] <= b.k) continue;
        bool left = false, right = false;
        for (int ip : g.neighbors(i))
            if (square_form(g, i, ip)) {
                left = true;
                break;
            }
        for (int jp : g.neighbors(j))
            if (square_form(g, j, jp)) {
                right = true;
                break;
            }
        if (!left || !right) return false;
    }
    return true;
}

bool sum_stays_basic_sampled(const BipartiteGraph& g, const Cover& b, int kp_max) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    if (!is_cover(g, b) || !is_basic(g, b)) throw NotBasic("not a basic cover");
    for (int kp = 1; kp <= kp_max; ++kp)
        for (const Cover& c : enumerate_basic(g, kp).covers)
            if (!is_basic(g, sum(b, c))) return false;
    return true;
}

std::pair<Cover, Cover> depth_witness(const BipartiteGraph& g) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_isolated(v))
            throw InvalidParameters("depth_witness requires no isolated vertices");
    Cover ca, cb;
    ca.k = cb.k = 1;
    ca.values.assign(g.vertex_count(), 0);
    cb.values.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) (g.in_a(v) ? ca : cb).values[v] = 1;
    return {ca, cb};
}

DimDegreeBound dim_bound_degree(const BipartiteGraph& g, bool include_swapped) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    DimDegreeBound res;
    int a = 0;
    for (int v : g.a_side())
        if (!g.is_isolated(v)) ++a;
    int s = g.vertex_count();
    for (int v : g.b_side())
        if (!g.is_isolated(v)) s = std::min(s, g.degree(v));
    res.s = s;
    res.dim_bound = a - s + 2;
    unsigned long long binom = 1;
    for (int i = 1; i <= s; ++i)
        binom = binom * static_cast<unsigned long long>(a - s + i) / i;
    unsigned long long fact = 1;
    for (int i = 2; i <= a - s; ++i) fact *= static_cast<unsigned long long>(i);
    res.multiplicity_bound = binom * fact;
    if (include_swapped) {
        int b = 0;
        for (int v : g.b_side())
            if (!g.is_isolated(v)) ++b;
        int sp = g.vertex_count();
        for (int v : g.a_side())
            if (!g.is_isolated(v)) sp = std::min(sp, g.degree(v));
        res.swapped_dim_bound = b - sp + 2;
    }
    return res;
}

std::vector<AraBound> ara_upper_bounds(const BipartiteGraph& g, int kmax) {
    return ara_upper_bounds(g, hilbert_function(g, kmax));
}

std::vector<AraBound> ara_upper_bounds(const BipartiteGraph& g, const HilbertProfile& hp) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    std::vector<AraBound> out;
    if (g.is_tree()) out.push_back({gdim(g).gdim, "gdim"});
    out.push_back({dim_bound_degree(g).dim_bound, "thm:7"});
    StripResult stripped = strip_isolated(g);
    if (is_unmixed(stripped.graph)) {
        CoverLattice l = build_lattice(stripped.graph);
        out.push_back({l.rank, "rank(L)"});
    }
    if (hp.stable) out.push_back({hp.dim, "dim"});
    std::stable_sort(out.begin(), out.end(),
                     [](const AraBound& x, const AraBound& y) { return x.bound < y.bound; });
    return out;
}

AlgebraReport analyze(const BipartiteGraph& g, int kmax, int m_max, int workers) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    AlgebraReport rep;
    WscResult wsc = satisfies_wsc(g);
    rep.wsc = wsc.holds;
    rep.domain = rep.wsc;
    StripResult stripped = strip_isolated(g);
    rep.unmixed = is_unmixed(stripped.graph);
    rep.hilbert = hilbert_function(g, kmax, workers);
    rep.gdim = gdim(g).gdim;
    rep.a = static_cast<int>(stripped.graph.a_side().size());
    rep.b = stripped.graph.vertex_count() - rep.a;
    rep.dim_upper_a_plus_1 = rep.a + 1;
    rep.dim_upper_degree = dim_bound_degree(g).dim_bound;
    if (!rep.wsc) rep.zero_divisor = zero_divisor_witness(g, m_max);
    rep.depth = depth_witness(stripped.graph);
    rep.ara_bounds = ara_upper_bounds(g, rep.hilbert);
    return rep;
}

}  // namespace vca
