#include <doctest.h>

#include <algorithm>
#include <set>

#include "vca/graph.hpp"

using namespace vca;

TEST_CASE("edge list validation") {
    CHECK_THROWS_AS(BipartiteGraph::from_edges(2, {{0, 0}}), InvalidVertexId);
    CHECK_THROWS_AS(BipartiteGraph::from_edges(2, {{0, 2}}), InvalidVertexId);
    CHECK_THROWS_AS(BipartiteGraph::from_edges(2, {{-1, 0}}), InvalidVertexId);
    BipartiteGraph g = BipartiteGraph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("odd cycle rejection carries a witness") {
    try {
        BipartiteGraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
        FAIL("expected NotBipartite");
    } catch (const NotBipartite& e) {
        REQUIRE(e.odd_cycle.size() % 2 == 1);
        REQUIRE(e.odd_cycle.size() >= 3);
        for (int v : e.odd_cycle) {
            CHECK(v >= 1);
            CHECK(v <= 3);
        }
    }
}

TEST_CASE("bipartition crosses every edge and A is the small side") {
    for (const char* spec : {"cycle 8", "path 7", "complete 2 4", "caterpillar 3 4 5"}) {
        BipartiteGraph g = generate(spec);
        CAPTURE(spec);
        CHECK(g.a_side().size() <= g.b_side().size());
        for (auto [u, v] : g.edges()) CHECK(g.in_a(u) != g.in_a(v));
    }
}

TEST_CASE("generators") {
    BipartiteGraph c6 = make_cycle(6);
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);
    CHECK(!c6.acyclic());

    BipartiteGraph p5 = make_path(5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.is_tree());

    BipartiteGraph k23 = make_complete(2, 3);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.a_side().size() == 2);

    BipartiteGraph r3 = make_regular(3);
    CHECK(r3.vertex_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(r3.degree(v) == 2);
    CHECK(isomorphic_brute(r3, c6));

    BipartiteGraph cat = make_caterpillar(4, 6, 6);
    CHECK(cat.vertex_count() == 12);
    CHECK(cat.is_tree());

    CHECK_THROWS_AS(make_cycle(5), InvalidParameters);
    CHECK_THROWS_AS(make_caterpillar(1, 3, 3), InvalidParameters);
    CHECK_THROWS_AS(make_caterpillar(4, 3, 3), InvalidParameters);
}

TEST_CASE("whisker attaches one leaf per vertex") {
    BipartiteGraph base = make_path(3);
    BipartiteGraph w = whisker(base);
    CHECK(w.vertex_count() == 6);
    CHECK(w.is_tree());
    int leaves = 0;
    for (int v = 0; v < 6; ++v)
        if (w.degree(v) == 1) ++leaves;
    CHECK(leaves == 3);  // one new leaf per base vertex; base endpoints gain degree
}

TEST_CASE("poset graph contains the vertical edges") {
    FinitePoset p = FinitePoset::from_relations(3, {{0, 2}, {1, 2}});
    BipartiteGraph g = poset_graph(p);
    CHECK(g.vertex_count() == 6);
    for (int i = 0; i < 3; ++i) CHECK(g.has_edge(i, 3 + i));
    CHECK(g.has_edge(0, 3 + 2));
    CHECK(g.has_edge(1, 3 + 2));
    CHECK(!g.has_edge(0, 3 + 1));
}

TEST_CASE("strip_isolated is idempotent and keeps the edges") {
    BipartiteGraph g = BipartiteGraph::from_edges(5, {{0, 3}, {3, 4}});
    StripResult s = strip_isolated(g);
    CHECK(s.graph.vertex_count() == 3);
    CHECK(s.graph.edge_count() == 2);
    CHECK(s.removed == std::vector<int>{1, 2});
    CHECK(s.old_id == std::vector<int>{0, 3, 4});
    StripResult s2 = strip_isolated(s.graph);
    CHECK(s2.removed.empty());
    CHECK(s2.graph.edge_count() == s.graph.edge_count());
}

TEST_CASE("text format round trip") {
    BipartiteGraph g = generate("caterpillar 3 4 5");
    BipartiteGraph h = parse_graph(write_graph(g));
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edges() == g.edges());

    BipartiteGraph c = parse_graph("# a square\nn 4\ne 1 2\ne 2 3 # inline\ne 3 4\ne 4 1\n");
    CHECK(c.edge_count() == 4);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\nx 1 2\n"), ParseError);
}

TEST_CASE("seeded generators are deterministic") {
    BipartiteGraph g1 = random_bipartite(4, 5, 0.5, 42);
    BipartiteGraph g2 = random_bipartite(4, 5, 0.5, 42);
    CHECK(g1.edges() == g2.edges());
    CHECK(random_bipartite(4, 5, 0.5, 43).edges() != g1.edges());

    BipartiteGraph t = random_tree(9, 7);
    CHECK(t.is_tree());
    CHECK(t.edges() == random_tree(9, 7).edges());
}

TEST_CASE("disjoint union renumbers the second part") {
    BipartiteGraph u = disjoint_union(make_path(3), make_cycle(4));
    CHECK(u.vertex_count() == 7);
    CHECK(u.edge_count() == 6);
    CHECK(u.component_count() == 2);
}

TEST_CASE("generate parses family specs") {
    CHECK(generate("cycle 6").edge_count() == 6);
    CHECK(generate("whisker-path 3").vertex_count() == 6);
    CHECK(generate("star 4").edge_count() == 4);
    CHECK(generate("random 3 3 0.5 1").vertex_count() == 6);
    CHECK(generate("random-tree 8 3").is_tree());
    CHECK_THROWS_AS(generate("dodecahedron"), InvalidParameters);
    CHECK_THROWS_AS(generate("cycle"), InvalidParameters);
}

TEST_CASE("finite poset closure and purity") {
    FinitePoset chain = FinitePoset::from_relations(3, {{0, 1}, {1, 2}});
    CHECK(chain.less_eq(0, 2));  // transitivity
    CHECK(chain.height() == 3);
    CHECK(chain.is_pure());

    FinitePoset v = FinitePoset::from_relations(3, {{0, 1}});
    CHECK(v.height() == 2);
    CHECK(!v.is_pure());  // maximal chains of sizes 2 and 1

    CHECK_THROWS_AS(FinitePoset::from_relations(2, {{0, 1}, {1, 0}}), InvalidParameters);
}
