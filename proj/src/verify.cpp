#include "vca/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vca/algebra.hpp"
#include "vca/drawing.hpp"
#include "vca/hypergraph.hpp"
#include "vca/lattice.hpp"

namespace vca {

namespace {

unsigned long long binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    unsigned long long out = 1;
    for (int i = 1; i <= r; ++i)
        out = out * static_cast<unsigned long long>(n - r + i) / i;
    return out;
}

Cover mk(int k, std::vector<int> v) { return Cover{k, std::move(v)}; }

// the 6-vertex tree used repeatedly in the examples: a double star
BipartiteGraph double_star() {
    return BipartiteGraph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
}

std::vector<std::vector<int>> brute_basic(const BipartiteGraph& g, int k) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<int> v(n, 0);
    for (;;) {
        Cover c{k, v};
        if (is_cover(g, c) && is_basic(g, c)) out.push_back(v);
        int i = n - 1;
        while (i >= 0 && v[i] == k) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

BipartiteGraph prufer_tree(int n, const std::vector<int>& seq) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1) leaves.insert(x);
    }
    int u = *leaves.begin(), w = *leaves.rbegin();
    edges.emplace_back(u, w);
    return BipartiteGraph::from_edges(n, edges);
}

std::vector<BipartiteGraph> base_trees_up_to_5() {
    std::vector<BipartiteGraph> out;
    out.push_back(BipartiteGraph::from_edges(2, {{0, 1}}));
    for (int n = 3; n <= 5; ++n) {
        std::vector<int> seq(n - 2, 0);
        for (;;) {
            BipartiteGraph t = prufer_tree(n, seq);
            bool fresh = true;
            for (const BipartiteGraph& s : out)
                if (s.vertex_count() == n && isomorphic_brute(s, t)) {
                    fresh = false;
                    break;
                }
            if (fresh) out.push_back(std::move(t));
            int i = n - 3;
            while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
            if (i < 0) break;
            ++seq[i];
        }
    }
    return out;
}

// every poset on m labeled elements admits a labeling where i < j implies
// j does not precede i, so subsets of {(i,j) : i < j} closed transitively
// cover all isomorphism types
std::vector<FinitePoset> posets_up_to_4() {
    std::vector<FinitePoset> out;
    for (int m = 1; m <= 4; ++m) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
        for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> rels;
            for (size_t t = 0; t < pairs.size(); ++t)
                if (mask >> t & 1) rels.push_back(pairs[t]);
            out.push_back(FinitePoset::from_relations(m, rels));
        }
    }
    return out;
}

bool pure_brute(const FinitePoset& p) {
    // walk saturated chains from minimal elements over covering relations
    std::vector<std::vector<int>> covers_up(p.m);
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.m; ++j) {
            if (i == j || !p.less_eq(i, j)) continue;
            bool covering = true;
            for (int z = 0; z < p.m; ++z)
                if (z != i && z != j && p.less_eq(i, z) && p.less_eq(z, j)) {
                    covering = false;
                    break;
                }
            if (covering) covers_up[i].push_back(j);
        }
    std::vector<int> lengths;
    auto dfs = [&](auto&& self, int v, int len) -> void {
        if (covers_up[v].empty()) {
            lengths.push_back(len);
            return;
        }
        for (int w : covers_up[v]) self(self, w, len + 1);
    };
    for (int v = 0; v < p.m; ++v) {
        bool minimal = true;
        for (int u = 0; u < p.m; ++u)
            if (u != v && p.less_eq(u, v)) minimal = false;
        if (minimal) dfs(dfs, v, 1);
    }
    return std::adjacent_find(lengths.begin(), lengths.end(),
                              std::not_equal_to<>()) == lengths.end();
}

int nonisolated_a(const BipartiteGraph& g) {
    int a = 0;
    for (int v : g.a_side())
        if (!g.is_isolated(v)) ++a;
    return a;
}

struct Suite {
    const std::function<void(const std::string&)>& emit;
    int failures = 0;
    std::ostringstream why;

    void fail(const char* what) {
        if (why.tellp() == 0) why << what;
    }

    void criterion(int num, const char* title, const std::function<void(Suite&)>& body) {
        why.str("");
        why.clear();
        try {
            body(*this);
        } catch (const std::exception& e) {
            if (why.tellp() == 0) why << "exception: " << e.what();
        }
        std::string detail = why.str();
        if (detail.empty()) {
            emit("PASS " + std::to_string(num) + ": " + title);
        } else {
            ++failures;
            emit("FAIL " + std::to_string(num) + ": " + std::string(title) + " — " + detail);
        }
    }

    void require(bool cond, const char* what) {
        if (!cond) fail(what);
    }
};

std::vector<std::pair<std::string, BipartiteGraph>> paper_families() {
    std::vector<std::pair<std::string, BipartiteGraph>> out;
    for (int a = 2; a <= 6; ++a)
        out.emplace_back("cycle " + std::to_string(2 * a), make_cycle(2 * a));
    for (int n = 2; n <= 9; ++n)
        out.emplace_back("path " + std::to_string(n), make_path(n));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 4}})
        out.emplace_back("complete " + std::to_string(a) + " " + std::to_string(b),
                         make_complete(a, b));
    for (int a = 2; a <= 5; ++a)
        out.emplace_back("regular " + std::to_string(a), make_regular(a));
    for (auto [r, a, b] :
         std::vector<std::tuple<int, int, int>>{{2, 3, 3}, {3, 4, 5}, {4, 6, 6}})
        out.emplace_back("caterpillar", make_caterpillar(r, a, b));
    out.emplace_back("whisker path 3", whisker(make_path(3)));
    out.emplace_back("double star", double_star());
    return out;
}

}  // namespace

int run_verification(const std::function<void(const std::string&)>& emit) {
    Suite s{emit};

    s.criterion(1, "hexagon: covers, dim, multiplicity, wsc, witnesses", [](Suite& s) {
        BipartiteGraph g = make_cycle(6);
        s.require(enumerate_basic(g, 1).count() == 5, "expected 5 basic 1-covers");
        HilbertProfile hp = hilbert_function(g, 8);
        s.require(hp.stable && hp.dim == 3, "expected stable dim 3");
        s.require(hp.multiplicity == 3, "expected multiplicity 3");
        s.require(!satisfies_wsc(g).holds, "wsc must fail");
        auto w = zero_divisor_witness(g, 2);
        s.require(w.has_value() && w->size() == 2, "expected a 2-cover witness");
        if (w) {
            Cover t = sum((*w)[0], (*w)[1]);
            s.require(!is_basic(g, t), "witness sum must be non-basic");
        }
        Cover p1 = mk(1, {1, 0, 1, 1, 0, 1}), p2 = mk(1, {1, 1, 0, 1, 1, 0});
        s.require(is_basic(g, p1) && is_basic(g, p2) && !is_basic(g, sum(p1, p2)),
                  "reference pair must sum to a non-basic 2-cover");
        auto [da, db] = depth_witness(g);
        s.require(nonzerodivisor_test(g, da) && nonzerodivisor_test(g, db),
                  "depth witness covers must be non-zero-divisors");
    });

    s.criterion(2, "even cycles: gdim, dim, multiplicity", [](Suite& s) {
        for (int a = 2; a <= 6; ++a) {
            BipartiteGraph g = make_cycle(2 * a);
            if (gdim(g).gdim != a) return s.fail("gdim != a");
            HilbertProfile hp = hilbert_function(g, a + 4);
            if (!hp.stable || hp.dim != a) return s.fail("dim != a");
            if (hp.multiplicity > static_cast<long long>(binom(a, 2) *
                                                         [&] {
                                                             unsigned long long f = 1;
                                                             for (int i = 2; i <= a - 2; ++i)
                                                                 f *= i;
                                                             return f;
                                                         }()))
                return s.fail("multiplicity above the cycle bound");
            if (a == 3 && hp.multiplicity != 3) return s.fail("C6 multiplicity != 3");
        }
    });

    s.criterion(3, "paths: gdim = dim = floor(n/2)+1", [](Suite& s) {
        for (int n = 2; n <= 9; ++n) {
            BipartiteGraph g = make_path(n);
            int expect = n / 2 + 1;
            if (gdim(g).gdim != expect) return s.fail("path gdim mismatch");
            HilbertProfile hp = hilbert_function(g, 8);
            if (!hp.stable || hp.dim != expect) return s.fail("path dim mismatch");
        }
    });

    s.criterion(4, "complete bipartite: 2 covers, dim 2, HF(k) = k+1", [](Suite& s) {
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 4}}) {
            BipartiteGraph g = make_complete(a, b);
            if (enumerate_basic(g, 1).count() != 2) return s.fail("K_{a,b} 1-cover count");
            HilbertProfile hp = hilbert_function(g, 8);
            if (!hp.stable || hp.dim != 2) return s.fail("K_{a,b} dim != 2");
            for (int k = 1; k <= 8; ++k)
                if (hp.counts[k - 1] != k + 1) return s.fail("K_{a,b} HF != k+1");
        }
    });

    s.criterion(5, "regular family: a+2 covers, dim 3, multiplicity a", [](Suite& s) {
        for (int a = 2; a <= 5; ++a) {
            BipartiteGraph g = make_regular(a);
            if (enumerate_basic(g, 1).count() != a + 2) return s.fail("cover count != a+2");
            HilbertProfile hp = hilbert_function(g, 6);
            if (!hp.stable || hp.dim != 3) return s.fail("dim != 3");
            if (hp.multiplicity != a) return s.fail("multiplicity != a");
        }
    });

    s.criterion(6, "6-vertex path: covers, gdim, dim, multiplicity, tree test", [](Suite& s) {
        BipartiteGraph g = make_path(6);
        s.require(enumerate_basic(g, 1).count() == 5, "expected 5 basic 1-covers");
        s.require(gdim(g).gdim == 4, "expected gdim 4");
        HilbertProfile hp = hilbert_function(g, 10);
        s.require(hp.stable && hp.dim == 4, "expected stable dim 4");
        s.require(hp.multiplicity == 1, "expected multiplicity 1");
        s.require(!tree_domain_test(g), "tree domain test must fail");
    });

    s.criterion(7, "C10: gdim 5", [](Suite& s) {
        s.require(gdim(make_cycle(10)).gdim == 5, "expected gdim 5");
    });

    s.criterion(8, "caterpillars: gdim r+1; ara bound 5 for (4,6,6)", [](Suite& s) {
        for (auto [r, a, b] :
             std::vector<std::tuple<int, int, int>>{{2, 3, 3}, {3, 4, 5}, {4, 6, 6}}) {
            BipartiteGraph g = make_caterpillar(r, a, b);
            if (gdim(g).gdim != r + 1) return s.fail("caterpillar gdim != r+1");
        }
        auto bounds = ara_upper_bounds(make_caterpillar(4, 6, 6), 8);
        s.require(!bounds.empty() && bounds.front().bound == 5,
                  "caterpillar(4,6,6) min ara bound != 5");
    });

    s.criterion(9, "wsc = cover criterion; zero-divisor search succeeds", [&](Suite& s) {
        for (const auto& [name, g] : paper_families()) {
            if (g.edge_count() == 0) continue;
            bool wsc = satisfies_wsc(g).holds;
            if (wsc != domain_criterion_via_covers(g))
                return s.fail("wsc and cover criterion disagree on a family");
            if (!wsc && !zero_divisor_witness(g, 4))
                return s.fail("no zero-divisor witness on a non-domain family");
        }
        int tested = 0, false_wsc = 0, witnessed = 0;
        for (uint64_t seed = 1; seed <= 200; ++seed) {
            uint64_t st = seed;
            int a = 1 + static_cast<int>(splitmix64(st) % 5);
            int b = 1 + static_cast<int>(splitmix64(st) % 5);
            BipartiteGraph g = random_bipartite(a, b, 0.5, seed);
            if (g.edge_count() == 0) continue;
            ++tested;
            bool wsc = satisfies_wsc(g).holds;
            if (wsc != domain_criterion_via_covers(g))
                return s.fail("wsc and cover criterion disagree on a random graph");
            if (!wsc) {
                ++false_wsc;
                if (zero_divisor_witness(g, 4)) ++witnessed;
            }
        }
        emit("info: criterion 9 random graphs tested " + std::to_string(tested) +
             ", wsc-false " + std::to_string(false_wsc) + ", witnesses found " +
             std::to_string(witnessed));
    });

    s.criterion(10, "sandwich gdim <= dim <= a+1; disjoint-union formulas", [](Suite& s) {
        for (const auto& [name, g] : paper_families()) {
            HilbertProfile hp = hilbert_function(g, 10);
            if (!hp.stable) continue;
            int gd = gdim(g).gdim;
            if (!(gd <= hp.dim && hp.dim <= nonisolated_a(g) + 1))
                return s.fail("sandwich violated on a family");
        }
        for (uint64_t seed = 1; seed <= 20; ++seed) {
            uint64_t st = seed * 977;
            BipartiteGraph g1 = make_path(2 + static_cast<int>(splitmix64(st) % 4));
            BipartiteGraph g2 = make_cycle(4 + 2 * static_cast<int>(splitmix64(st) % 3));
            BipartiteGraph u = disjoint_union(g1, g2);
            int gd1 = gdim(g1).gdim, gd2 = gdim(g2).gdim, gdu = gdim(u).gdim;
            if (gdu != gd1 + gd2 - 1) return s.fail("union gdim formula violated");
            HilbertProfile h1 = hilbert_function(g1, 9), h2 = hilbert_function(g2, 9),
                           hu = hilbert_function(u, 9);
            if (!h1.stable || !h2.stable || !hu.stable)
                return s.fail("union profile not stable at kmax 9");
            if (hu.dim != h1.dim + h2.dim - 1) return s.fail("union dim formula violated");
        }
    });

    s.criterion(11, "descending-sequence injection and distinctness", [](Suite& s) {
        std::vector<BipartiteGraph> gs;
        for (int a = 2; a <= 5; ++a) gs.push_back(make_cycle(2 * a));
        for (int n = 2; n <= 9; ++n) gs.push_back(make_path(n));
        for (auto [r, a, b] :
             std::vector<std::tuple<int, int, int>>{{2, 3, 3}, {3, 4, 5}, {4, 6, 6}})
            gs.push_back(make_caterpillar(r, a, b));
        for (const BipartiteGraph& g : gs) {
            GdimResult gr = gdim(g);
            int r = gr.gdim - 1;
            HilbertProfile hp = hilbert_function(g, 10);
            for (int k = 1; k <= 10; ++k)
                if (static_cast<unsigned long long>(hp.counts[k - 1]) < binom(k + r, r))
                    return s.fail("binom(k+r,r) <= HF(k) violated");
            if (r > 4 || !g.connected()) continue;
            for (int k = 1; k <= 3; ++k) {
                std::set<std::vector<int>> seen;
                std::vector<int> omega(r, 0);
                auto tuples = [&](auto&& self, int pos, int hi) -> bool {
                    if (pos == r) {
                        Cover c = descending_sequence_to_cover(g, gr.witness, omega, k);
                        if (!is_basic(g, c)) return false;
                        return seen.insert(c.values).second;
                    }
                    for (int v = hi; v >= 0; --v) {
                        omega[pos] = v;
                        if (!self(self, pos + 1, v)) return false;
                    }
                    return true;
                };
                if (!tuples(tuples, 0, k))
                    return s.fail("descending construction non-basic or collided");
                if (seen.size() != binom(k + r, r))
                    return s.fail("descending tuple count mismatch");
            }
        }
    });

    s.criterion(12, "unmixed lattices: whisker trees and poset graphs", [](Suite& s) {
        for (const BipartiteGraph& base : base_trees_up_to_5()) {
            BipartiteGraph t = whisker(base);
            if (!is_unmixed(t)) return s.fail("whisker tree not unmixed");
            CoverLattice l = build_lattice(t);
            HilbertProfile hp = hilbert_function(t, t.vertex_count() / 2 + 4);
            if (!hp.stable) return s.fail("whisker profile not stable");
            if (l.rank != hp.dim) return s.fail("whisker rank != dim");
            if (l.maximal_chain_count != hp.multiplicity)
                return s.fail("whisker chain count != multiplicity");
        }
        for (const FinitePoset& p : posets_up_to_4()) {
            BipartiteGraph g = poset_graph(p);
            CoverLattice l = build_lattice(g);
            CoverLattice jp = poset_ideals(p);
            if (!order_isomorphic(l, jp))
                return s.fail("cover lattice of G(P) not isomorphic to J(P)");
            HilbertProfile hp = hilbert_function(g, 8);
            if (!hp.stable || l.rank != hp.dim) return s.fail("G(P) rank != dim");
            if (l.maximal_chain_count != hp.multiplicity)
                return s.fail("G(P) chain count != multiplicity");
            if (gorenstein_test(p) != pure_brute(p))
                return s.fail("gorenstein test disagrees with brute purity");
        }
    });

    s.criterion(13, "oracle equivalence: brute force and hypergraph path", [](Suite& s) {
        std::vector<BipartiteGraph> gs;
        for (int n = 2; n <= 8; ++n) gs.push_back(make_path(n));
        for (int c = 4; c <= 8; c += 2) gs.push_back(make_cycle(c));
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 4}})
            gs.push_back(make_complete(a, b));
        gs.push_back(make_regular(2));
        gs.push_back(make_regular(3));
        gs.push_back(make_caterpillar(2, 3, 3));
        gs.push_back(double_star());
        gs.push_back(whisker(make_path(3)));
        for (uint64_t seed = 1; seed <= 5; ++seed)
            gs.push_back(random_bipartite(4, 4, 0.5, seed));
        for (const BipartiteGraph& g : gs) {
            if (g.edge_count() == 0) continue;
            std::vector<std::vector<int>> faces;
            for (auto [u, v] : g.edges()) faces.push_back({u, v});
            WeightedHypergraph h = WeightedHypergraph::create(
                g.vertex_count(), faces, std::vector<int>(faces.size(), 1));
            for (int k = 1; k <= 3; ++k) {
                CoverSet cs = enumerate_basic(g, k);
                std::vector<std::vector<int>> got;
                for (const Cover& c : cs.covers) got.push_back(c.values);
                if (got != brute_basic(g, k)) return s.fail("brute-force mismatch");
                CoverSet hs = enumerate_basic_h(h, k);
                std::vector<std::vector<int>> hgot;
                for (const Cover& c : hs.covers) hgot.push_back(c.values);
                if (hgot != got) return s.fail("hypergraph path mismatch");
            }
        }
    });

    s.criterion(14, "random trees: dim, multiplicity bound, leaves-right", [](Suite& s) {
        for (uint64_t seed = 1; seed <= 50; ++seed) {
            uint64_t st = seed * 31;
            int n = 2 + static_cast<int>(splitmix64(st) % 11);
            BipartiteGraph t = random_tree(n, seed);
            TreeDimResult td = tree_dim(t);
            HilbertProfile hp = hilbert_function(t, td.dim + 2);
            if (!hp.stable || hp.dim != td.dim) return s.fail("tree dim mismatch");
            if (hp.multiplicity > static_cast<long long>(td.multiplicity_bound))
                return s.fail("tree multiplicity above bound");
            tree_optimal_leaves_right(t);  // throws on failure
        }
    });

    s.criterion(15, "hypergraph degree bounds", [&](Suite& s) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<int> face(n);
            for (int i = 0; i < n; ++i) face[i] = i;
            WeightedHypergraph h = WeightedHypergraph::create(n, {face}, {1});
            DegreeBoundsReport rep = degree_bounds_check(h, n + 4);
            if (!rep.stable || rep.degree != n - 1 || !rep.within_bounds)
                return s.fail("simplex degree bound failed");
        }
        int stable_count = 0;
        for (uint64_t seed = 1; seed <= 20; ++seed) {
            uint64_t st = seed * 131;
            int n = 3 + static_cast<int>(splitmix64(st) % 4);
            int maxw = n <= 4 ? 2 : 1;
            std::vector<std::vector<int>> faces;
            std::vector<int> weights;
            int want = 2 + static_cast<int>(splitmix64(st) % 3);
            for (int tries = 0; tries < 40 && static_cast<int>(faces.size()) < want;
                 ++tries) {
                int size = 2 + static_cast<int>(splitmix64(st) % 2);
                std::set<int> f;
                while (static_cast<int>(f.size()) < size)
                    f.insert(static_cast<int>(splitmix64(st) % n));
                std::vector<int> fv(f.begin(), f.end());
                bool ok = true;
                for (const auto& e : faces) {
                    if (std::includes(e.begin(), e.end(), fv.begin(), fv.end()) ||
                        std::includes(fv.begin(), fv.end(), e.begin(), e.end())) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                faces.push_back(fv);
                weights.push_back(1 + static_cast<int>(splitmix64(st) % maxw));
            }
            if (faces.empty()) continue;
            WeightedHypergraph h = WeightedHypergraph::create(n, faces, weights);
            try {
                DegreeBoundsReport rep = degree_bounds_check(h, 8, 5000000ULL);
                if (rep.stable) {
                    ++stable_count;
                    if (!rep.within_bounds)
                        return s.fail("random hypergraph outside degree bounds");
                }
            } catch (const Budget&) {
                continue;
            }
        }
        emit("info: criterion 15 stable random hypergraphs: " +
             std::to_string(stable_count));
        s.require(stable_count >= 5, "too few stable random hypergraphs");
    });

    return s.failures;
}

}  // namespace vca
