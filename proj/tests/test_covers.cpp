#include <doctest.h>

#include <algorithm>

#include "vca/covers.hpp"
#include "vca/graph.hpp"

using namespace vca;

namespace {

std::vector<std::vector<int>> brute(const BipartiteGraph& g, int k) {
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

std::vector<std::vector<int>> values_of(const CoverSet& cs) {
    std::vector<std::vector<int>> out;
    for (const Cover& c : cs.covers) out.push_back(c.values);
    return out;
}

}  // namespace

TEST_CASE("cover predicates on a single edge") {
    BipartiteGraph g = make_path(2);
    CHECK(is_cover(g, {1, {1, 0}}));
    CHECK(is_basic(g, {1, {1, 0}}));
    CHECK(is_cover(g, {1, {1, 1}}));
    CHECK(!is_basic(g, {1, {1, 1}}));
    CHECK(!is_cover(g, {1, {0, 0}}));
    CHECK(!is_cover(g, {1, {-1, 2}}));
    CHECK_THROWS_AS(is_cover(g, {1, {1, 0, 0}}), LengthMismatch);
    CHECK_THROWS_AS(lop_positions(g, {1, {0, 0}}), NotACover);
}

TEST_CASE("hexagon basic 1-covers") {
    BipartiteGraph g = make_cycle(6);
    CoverSet cs = enumerate_basic(g, 1);
    REQUIRE(cs.count() == 5);
    std::vector<std::vector<int>> expect = {{0, 1, 0, 1, 0, 1},
                                            {0, 1, 1, 0, 1, 1},
                                            {1, 0, 1, 0, 1, 0},
                                            {1, 0, 1, 1, 0, 1},
                                            {1, 1, 0, 1, 1, 0}};
    CHECK(values_of(cs) == expect);
}

TEST_CASE("enumeration matches brute force") {
    std::vector<BipartiteGraph> gs = {make_cycle(6), make_path(5), make_complete(2, 3),
                                      make_regular(3), random_bipartite(3, 3, 0.6, 11),
                                      whisker(make_path(3))};
    for (const BipartiteGraph& g : gs) {
        if (g.edge_count() == 0) continue;
        for (int k = 1; k <= 3; ++k) {
            CAPTURE(k);
            CHECK(values_of(enumerate_basic(g, k)) == brute(g, k));
        }
    }
}

TEST_CASE("basic covers stay in the box and scale") {
    BipartiteGraph g = make_cycle(8);
    for (int k = 1; k <= 4; ++k)
        for (const Cover& c : enumerate_basic(g, k).covers) {
            for (int v : c.values) {
                CHECK(v >= 0);
                CHECK(v <= k);
            }
            for (int t = 2; t <= 3; ++t) {
                Cover scaled{t * c.k, c.values};
                for (int& v : scaled.values) v *= t;
                CHECK(is_basic(g, scaled));
            }
        }
}

TEST_CASE("covers of graphs with isolated vertices are zero there") {
    BipartiteGraph g = BipartiteGraph::from_edges(4, {{0, 2}});
    CoverSet cs = enumerate_basic(g, 2);
    for (const Cover& c : cs.covers) {
        CHECK(c.values[1] == 0);
        CHECK(c.values[3] == 0);
    }
    CHECK(values_of(cs) == brute(g, 2));
}

TEST_CASE("b_side_completion") {
    BipartiteGraph hex = make_cycle(6);
    Cover out;
    // A = {0,2,4}; completion of (1,1,0) must be the basic cover (1,0,1,1,0,1)
    REQUIRE(b_side_completion(hex, {1, 1, 0}, 1, out));
    CHECK(out.values == std::vector<int>{1, 0, 1, 1, 0, 1});
    CHECK(!b_side_completion(hex, {1, 0, 0}, 1, out));  // vertex 1 ends up loppable

    BipartiteGraph p4 = make_path(4);
    REQUIRE(b_side_completion(p4, {0, 0}, 1, out));
    int ones = 0;
    for (int v : out.values) ones += v;
    CHECK(ones == 2);

    BipartiteGraph edge = make_path(2);
    REQUIRE(b_side_completion(edge, {1}, 3, out));
    CHECK(out.values == std::vector<int>{1, 2});
}

TEST_CASE("decomposition into basic 1-covers") {
    BipartiteGraph hex = make_cycle(6);
    Cover one{1, {1, 0, 1, 1, 0, 1}};
    auto d1 = decompose_into_one_covers(hex, one);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].values == one.values);

    Cover twice{2, {2, 0, 2, 0, 2, 0}};
    auto d2 = decompose_into_one_covers(hex, twice);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].values == std::vector<int>{1, 0, 1, 0, 1, 0});
    CHECK(d2[1].values == d2[0].values);

    BipartiteGraph p5 = make_path(5);
    for (const Cover& c : enumerate_basic(p5, 3).covers) {
        auto parts = decompose_into_one_covers(p5, c);
        REQUIRE(parts.size() == 3);
        Cover total = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) total = sum(total, parts[i]);
        CHECK(total.values == c.values);
        for (const Cover& p : parts) CHECK(is_basic(p5, p));
    }

    CHECK_THROWS_AS(decompose_into_one_covers(hex, Cover{2, {2, 1, 1, 1, 1, 1}}), NotBasic);
}

TEST_CASE("enumerate_basic rejects bad inputs") {
    CHECK_THROWS_AS(enumerate_basic(make_path(2), 0), InvalidParameters);
    BipartiteGraph empty = BipartiteGraph::from_edges(3, {});
    CHECK_THROWS_AS(enumerate_basic(empty, 1), NoEdges);
}

TEST_CASE("cover text round trip") {
    Cover c{2, {0, 1, 2}};
    CHECK(write_cover(c) == "2 0 1 2");
    Cover d = parse_cover("2 0 1 2");
    CHECK(d.k == 2);
    CHECK(d.values == c.values);
    CHECK_THROWS_AS(parse_cover(""), ParseError);
    CHECK_THROWS_AS(parse_cover("3"), ParseError);
}
