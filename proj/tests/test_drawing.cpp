#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "vca/drawing.hpp"
#include "vca/graph.hpp"

using namespace vca;

namespace {

// oracle: maximize r over all (sigma, tau) permutations of the two sides
int gdim_brute(const BipartiteGraph& g) {
    std::vector<int> sa = g.a_side(), sb = g.b_side();
    if (sa.size() > sb.size()) std::swap(sa, sb);
    int best = 0;
    std::sort(sa.begin(), sa.end());
    do {
        std::vector<int> tb = sb;
        std::sort(tb.begin(), tb.end());
        do {
            StandardDrawing d{sa, tb};
            best = std::max(best, r_of(g, d));
        } while (std::next_permutation(tb.begin(), tb.end()));
    } while (std::next_permutation(sa.begin(), sa.end()));
    return best + 1;
}

}  // namespace

TEST_CASE("gdim on the named families") {
    CHECK(gdim(make_cycle(6)).gdim == 3);
    CHECK(gdim(make_cycle(10)).gdim == 5);
    CHECK(gdim(make_complete(3, 4)).gdim == 2);
    CHECK(gdim(make_complete(1, 5)).gdim == 2);
    for (int n = 2; n <= 9; ++n) CHECK(gdim(make_path(n)).gdim == n / 2 + 1);
    for (auto [r, a, b] :
         std::vector<std::tuple<int, int, int>>{{2, 3, 3}, {3, 4, 5}, {4, 6, 6}})
        CHECK(gdim(make_caterpillar(r, a, b)).gdim == r + 1);
    CHECK_THROWS_AS(gdim(BipartiteGraph::from_edges(2, {})), NoEdges);
}

TEST_CASE("ordered-matching gdim agrees with the permutation oracle") {
    std::vector<BipartiteGraph> gs = {make_path(4), make_path(7), make_cycle(4),
                                      make_cycle(6), make_cycle(8), make_complete(2, 3),
                                      make_complete(3, 4), make_regular(3),
                                      whisker(make_path(3))};
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        BipartiteGraph g = random_bipartite(3, 4, 0.5, seed);
        if (g.edge_count() > 0 && g.connected()) gs.push_back(g);
    }
    for (const BipartiteGraph& g : gs) {
        CAPTURE(write_graph(g));
        CHECK(gdim(g).gdim == gdim_brute(g));
    }
}

TEST_CASE("witness drawing is consistent") {
    for (const char* spec : {"cycle 10", "path 6", "caterpillar 3 4 5", "complete 2 3"}) {
        BipartiteGraph g = generate(spec);
        GdimResult res = gdim(g);
        CAPTURE(spec);
        CHECK(r_of(g, res.witness) == res.gdim - 1);
        CHECK(static_cast<int>(res.sequence.size()) == res.gdim - 1);
        // the sequence really is an ordered matching
        std::set<int> us, vs;
        for (size_t t = 0; t < res.sequence.size(); ++t) {
            auto [u, v] = res.sequence[t];
            CHECK(g.has_edge(u, v));
            CHECK(us.insert(u).second);
            CHECK(vs.insert(v).second);
            for (size_t p = 0; p < t; ++p) CHECK(!g.has_edge(u, res.sequence[p].second));
        }
    }
}

TEST_CASE("edge classification") {
    BipartiteGraph g = make_path(4);  // A = {1, 2}? sides balanced: {0,2} vs {1,3}
    StandardDrawing d{{1, 3}, {0, 2}};
    CHECK(classify_edge(d, 1, 0) == EdgeClass::Vertical);
    CHECK(classify_edge(d, 3, 2) == EdgeClass::Vertical);
    CHECK(classify_edge(d, 1, 2) == EdgeClass::Backslash);
    StandardDrawing flipped{{3, 1}, {0, 2}};
    CHECK(classify_edge(flipped, 1, 0) == EdgeClass::Slash);
}

TEST_CASE("disconnected gdim formula") {
    BipartiteGraph u = disjoint_union(make_cycle(6), make_path(5));
    GdimResult res = gdim(u);
    CHECK(res.component_gdims == std::vector<int>{3, 3});
    CHECK(res.gdim == 3 + 3 - 1);
}

TEST_CASE("descending sequences produce distinct basic covers") {
    BipartiteGraph g = make_cycle(8);
    GdimResult res = gdim(g);
    int r = res.gdim - 1;
    REQUIRE(r == 3);
    for (int k = 1; k <= 3; ++k) {
        std::set<std::vector<int>> seen;
        std::vector<int> omega(r);
        auto rec = [&](auto&& self, int pos, int hi) -> void {
            if (pos == r) {
                Cover c = descending_sequence_to_cover(g, res.witness, omega, k);
                CHECK(is_basic(g, c));
                CHECK(seen.insert(c.values).second);
                return;
            }
            for (int v = hi; v >= 0; --v) {
                omega[pos] = v;
                self(self, pos + 1, v);
            }
        };
        rec(rec, 0, k);
        unsigned long long expect = 1;  // binom(k+r, r)
        for (int i = 1; i <= r; ++i) expect = expect * (k + i) / i;
        CHECK(seen.size() == expect);
    }
    CHECK_THROWS_AS(descending_sequence_to_cover(g, res.witness, {0, 1, 0}, 1),
                    NotDescending);
    CHECK_THROWS_AS(descending_sequence_to_cover(g, res.witness, {1, 0}, 1),
                    InvalidParameters);
}

TEST_CASE("saw connectivity") {
    BipartiteGraph g = make_path(6);
    GdimResult res = gdim(g);
    int r = res.gdim - 1;
    REQUIRE(r == 3);
    for (int i = 0; i < r; ++i) CHECK(saw_connected(g, res.witness, i, i));
    CHECK_THROWS_AS(saw_connected(g, res.witness, 0, r), PositionOutOfRange);
}

TEST_CASE("tree dimension and leaves-right drawings") {
    BipartiteGraph p6 = make_path(6);
    TreeDimResult td = tree_dim(p6);
    CHECK(td.dim == 4);
    CHECK(td.multiplicity_bound >= 1);

    StandardDrawing d = tree_optimal_leaves_right(p6);
    int r = r_of(p6, d);
    CHECK(r == 3);
    // everything placed after position r is a leaf
    for (size_t p = r; p < d.sigma.size(); ++p) CHECK(p6.degree(d.sigma[p]) == 1);
    for (size_t p = r; p < d.tau.size(); ++p) CHECK(p6.degree(d.tau[p]) == 1);
    // no edge joins two late positions (would close a cycle in a tree)
    for (auto [u, v] : p6.edges()) {
        auto spos = std::find(d.sigma.begin(), d.sigma.end(), u) - d.sigma.begin();
        auto tpos = std::find(d.tau.begin(), d.tau.end(), v) - d.tau.begin();
        if (spos == static_cast<long>(d.sigma.size())) {
            spos = std::find(d.sigma.begin(), d.sigma.end(), v) - d.sigma.begin();
            tpos = std::find(d.tau.begin(), d.tau.end(), u) - d.tau.begin();
        }
        CHECK(!(spos >= r && tpos >= r));
    }

    BipartiteGraph star = make_complete(1, 5);
    CHECK(r_of(star, tree_optimal_leaves_right(star)) == 1);

    BipartiteGraph wp3 = whisker(make_path(3));
    StandardDrawing wd = tree_optimal_leaves_right(wp3);
    CHECK(r_of(wp3, wd) == 3);
    CHECK(wd.sigma.size() == 3);  // nothing to the right of r

    CHECK_THROWS_AS(tree_dim(make_cycle(6)), NotATree);
}

TEST_CASE("rendering mentions every edge") {
    BipartiteGraph g = make_path(4);
    GdimResult res = gdim(g);
    std::string text = render_drawing(g, res.witness);
    CHECK(text.find("r: ") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') >= 3);
}
