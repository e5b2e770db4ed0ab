#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "vca.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    vca_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("graph lifecycle through the C API") {
    vca_graph* g = nullptr;
    REQUIRE(vca_graph_generate("cycle 6", &g) == VCA_OK);
    char* text = nullptr;
    REQUIRE(vca_graph_to_text(g, &text) == VCA_OK);
    std::string t = take(text);
    CHECK(t.find("n 6") != std::string::npos);

    vca_graph* g2 = nullptr;
    REQUIRE(vca_graph_from_text(t.c_str(), &g2) == VCA_OK);
    char* text2 = nullptr;
    REQUIRE(vca_graph_to_text(g2, &text2) == VCA_OK);
    CHECK(take(text2) == t);
    vca_graph_free(g2);
    vca_graph_free(g);
}

TEST_CASE("error statuses and messages") {
    vca_graph* g = nullptr;
    CHECK(vca_graph_generate("dodecahedron 5", &g) == VCA_ERR_INVALID_ARG);
    CHECK(g == nullptr);
    CHECK(std::strlen(vca_last_error()) > 0);

    CHECK(vca_graph_from_text("n 3\ne 1 2\ne 2 3\ne 3 1\n", &g) ==
          VCA_ERR_NOT_BIPARTITE);
    CHECK(vca_graph_from_text("nonsense", &g) == VCA_ERR_PARSE);

    REQUIRE(vca_graph_from_text("n 2\n", &g) == VCA_OK);
    char* out = nullptr;
    CHECK(vca_hilbert_json(g, 6, 1, &out) == VCA_ERR_NO_EDGES);
    vca_graph_free(g);

    REQUIRE(vca_graph_generate("cycle 6", &g) == VCA_OK);
    CHECK(vca_lattice_json(g, &out) == VCA_ERR_INVALID_ARG);  // mixed graph
    vca_graph_free(g);
}

TEST_CASE("analysis report via the C API") {
    vca_graph* g = nullptr;
    REQUIRE(vca_graph_generate("cycle 6", &g) == VCA_OK);
    char* out = nullptr;
    REQUIRE(vca_analyze_json(g, 8, 2, 1, &out) == VCA_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["wsc"] == false);
    CHECK(j["domain"] == false);
    CHECK(j["unmixed"] == false);
    CHECK(j["gdim"] == 3);
    CHECK(j["hilbert"]["dim"] == 3);
    CHECK(j["hilbert"]["multiplicity"] == 3);
    CHECK(j["lattice"].is_null());
    CHECK(j["ara_upper_bound"]["bound"].is_number());

    REQUIRE(vca_analyze_text(g, 8, 2, 1, &out) == VCA_OK);
    CHECK(take(out).find("dim") != std::string::npos);
    vca_graph_free(g);
}

TEST_CASE("analyze output is byte-identical across worker counts") {
    vca_graph* g = nullptr;
    REQUIRE(vca_graph_generate("cycle 8", &g) == VCA_OK);
    char *o1 = nullptr, *o4 = nullptr;
    REQUIRE(vca_analyze_json(g, 9, 2, 1, &o1) == VCA_OK);
    REQUIRE(vca_analyze_json(g, 9, 2, 4, &o4) == VCA_OK);
    CHECK(take(o1) == take(o4));
    vca_graph_free(g);
}

TEST_CASE("covers, gdim, hilbert, lattice endpoints") {
    vca_graph* g = nullptr;
    REQUIRE(vca_graph_generate("cycle 6", &g) == VCA_OK);
    char* out = nullptr;

    REQUIRE(vca_covers_json(g, 1, &out) == VCA_OK);
    auto covers = nlohmann::json::parse(take(out));
    CHECK(covers["k"] == 1);
    CHECK(covers["count"] == 5);
    CHECK(covers["covers"].size() == 5);

    REQUIRE(vca_gdim_json(g, &out) == VCA_OK);
    auto gd = nlohmann::json::parse(take(out));
    CHECK(gd["gdim"] == 3);
    CHECK(gd["drawing"]["r"] == 2);

    REQUIRE(vca_gdim_render(g, &out) == VCA_OK);
    CHECK(take(out).find("r: 2") != std::string::npos);

    REQUIRE(vca_hilbert_json(g, 8, 0, &out) == VCA_OK);
    auto h = nlohmann::json::parse(take(out));
    CHECK(h["counts"][0] == 5);
    CHECK(h["dim"] == 3);

    REQUIRE(vca_hilbert_text(g, 8, 1, &out) == VCA_OK);
    CHECK(!take(out).empty());
    vca_graph_free(g);

    REQUIRE(vca_graph_generate("whisker-path 3", &g) == VCA_OK);
    REQUIRE(vca_lattice_json(g, &out) == VCA_OK);
    auto l = nlohmann::json::parse(take(out));
    CHECK(l["rank"] == 4);
    CHECK(l["maximal_chain_count"].is_string());
    vca_graph_free(g);
}

TEST_CASE("hypergraph endpoint") {
    vca_hypergraph* h = nullptr;
    REQUIRE(vca_hypergraph_from_text("n 3\nf 1 1 2 3\n", &h) == VCA_OK);
    char* out = nullptr;
    REQUIRE(vca_hypergraph_report_json(h, 7, 0, &out) == VCA_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["degree_bounds"]["stable"] == true);
    CHECK(j["degree_bounds"]["degree"] == 2);
    CHECK(j["degree_bounds"]["within_bounds"] == true);
    vca_hypergraph_free(h);

    CHECK(vca_hypergraph_from_text("n 2\nf 1 5\n", &h) == VCA_ERR_PARSE);

    REQUIRE(vca_hypergraph_from_text("n 8\nf 9 1 2 3 4 5 6 7 8\n", &h) == VCA_OK);
    CHECK(vca_hypergraph_report_json(h, 4, 1000, &out) == VCA_ERR_BUDGET);
    vca_hypergraph_free(h);
}
