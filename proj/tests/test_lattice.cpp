#include <doctest.h>

#include "vca/algebra.hpp"
#include "vca/graph.hpp"
#include "vca/lattice.hpp"

using namespace vca;

TEST_CASE("complete bipartite lattice is a two-element chain") {
    for (int a = 2; a <= 4; ++a) {
        CoverLattice l = build_lattice(make_complete(a, a));
        CHECK(l.elements.size() == 2);
        CHECK(l.rank == 2);
        CHECK(l.maximal_chain_count == 1);
        CHECK(l.hasse.size() == 1);
        CHECK(hibi_relations(l).empty());
    }
}

TEST_CASE("square lattice") {
    CoverLattice l = build_lattice(make_cycle(4));
    CHECK(l.elements.size() == 2);
    CHECK(l.rank == 2);
    CHECK(hibi_relations(l).empty());
}

TEST_CASE("whisker tree lattice matches dimension and multiplicity") {
    BipartiteGraph t = whisker(make_path(3));
    CoverLattice l = build_lattice(t);
    CHECK(l.rank == 4);  // n/2 + 1
    HilbertProfile hp = hilbert_function(t, 8);
    REQUIRE(hp.stable);
    CHECK(l.rank == hp.dim);
    CHECK(l.maximal_chain_count == hp.multiplicity);
    for (const auto& q : hibi_relations(l)) {
        const Cover &a = l.elements[q[0]], &b = l.elements[q[1]];
        const Cover &j = l.elements[q[2]], &m = l.elements[q[3]];
        for (size_t v = 0; v < a.values.size(); ++v)
            CHECK(a.values[v] + b.values[v] == j.values[v] + m.values[v]);
    }
}

TEST_CASE("join and meet use the component formulas") {
    BipartiteGraph t = whisker(make_path(3));
    CoverLattice l = build_lattice(t);
    for (size_t i = 0; i < l.elements.size(); ++i)
        for (size_t j = 0; j < l.elements.size(); ++j) {
            Cover jn = lattice_join(t, l.elements[i], l.elements[j]);
            Cover mt = lattice_meet(t, l.elements[i], l.elements[j]);
            CHECK(is_basic(t, jn));
            CHECK(is_basic(t, mt));
            for (int v = 0; v < t.vertex_count(); ++v) {
                int x = l.elements[i].values[v], y = l.elements[j].values[v];
                if (t.in_a(v)) {
                    CHECK(jn.values[v] == std::max(x, y));
                    CHECK(mt.values[v] == std::min(x, y));
                } else {
                    CHECK(jn.values[v] == std::min(x, y));
                    CHECK(mt.values[v] == std::max(x, y));
                }
            }
        }
}

TEST_CASE("build_lattice rejects mixed graphs") {
    CHECK_THROWS_AS(build_lattice(make_complete(2, 3)), NotUnmixed);
    CHECK_THROWS_AS(build_lattice(make_cycle(6)), NotUnmixed);
}

TEST_CASE("poset ideals") {
    FinitePoset antichain = FinitePoset::from_relations(2, {});
    CoverLattice b2 = poset_ideals(antichain);
    CHECK(b2.elements.size() == 4);
    CHECK(b2.rank == 3);
    CHECK(b2.maximal_chain_count == 2);

    FinitePoset chain = FinitePoset::from_relations(3, {{0, 1}, {1, 2}});
    CoverLattice c = poset_ideals(chain);
    CHECK(c.elements.size() == 4);
    CHECK(c.rank == 4);
    CHECK(c.maximal_chain_count == 1);

    FinitePoset vee = FinitePoset::from_relations(3, {{0, 2}, {1, 2}});
    CHECK(poset_ideals(vee).elements.size() == 5);
}

TEST_CASE("gorenstein test is poset purity") {
    CHECK(gorenstein_test(FinitePoset::from_relations(3, {})));
    CHECK(gorenstein_test(FinitePoset::from_relations(3, {{0, 1}, {1, 2}})));
    CHECK(!gorenstein_test(FinitePoset::from_relations(3, {{0, 1}})));
}

TEST_CASE("cover lattice of a poset graph is J(P)") {
    std::vector<FinitePoset> ps = {FinitePoset::from_relations(2, {}),
                                   FinitePoset::from_relations(3, {{0, 2}, {1, 2}}),
                                   FinitePoset::from_relations(4, {{0, 1}, {2, 3}}),
                                   FinitePoset::from_relations(3, {{0, 1}, {1, 2}})};
    for (const FinitePoset& p : ps) {
        CoverLattice l = build_lattice(poset_graph(p));
        CoverLattice jp = poset_ideals(p);
        CHECK(order_isomorphic(l, jp));
    }
    // a chain of 4 ideals is not isomorphic to the Boolean lattice B2
    CHECK(!order_isomorphic(poset_ideals(FinitePoset::from_relations(3, {{0, 1}, {1, 2}})),
                            poset_ideals(FinitePoset::from_relations(2, {}))));
}
