#include "vca.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "vca/report.hpp"
#include "vca/verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
vca_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return VCA_OK;
    } catch (const vca::NotBipartite& e) {
        g_last_error = e.what();
        return VCA_ERR_NOT_BIPARTITE;
    } catch (const vca::NoEdges& e) {
        g_last_error = e.what();
        return VCA_ERR_NO_EDGES;
    } catch (const vca::NoFaces& e) {
        g_last_error = e.what();
        return VCA_ERR_NO_EDGES;
    } catch (const vca::ParseError& e) {
        g_last_error = e.what();
        return VCA_ERR_PARSE;
    } catch (const vca::Budget& e) {
        g_last_error = e.what();
        return VCA_ERR_BUDGET;
    } catch (const vca::InvalidParameters& e) {
        g_last_error = e.what();
        return VCA_ERR_INVALID_ARG;
    } catch (const vca::InvalidVertexId& e) {
        g_last_error = e.what();
        return VCA_ERR_INVALID_ARG;
    } catch (const vca::LengthMismatch& e) {
        g_last_error = e.what();
        return VCA_ERR_INVALID_ARG;
    } catch (const vca::NotUnmixed& e) {
        g_last_error = e.what();
        return VCA_ERR_INVALID_ARG;
    } catch (const vca::NotATree& e) {
        g_last_error = e.what();
        return VCA_ERR_INVALID_ARG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return VCA_ERR_INTERNAL;
    }
}

int dflt(int v, int d) { return v > 0 ? v : d; }

}  // namespace

struct vca_graph {
    vca::BipartiteGraph g;
};

struct vca_hypergraph {
    vca::WeightedHypergraph h;
};

extern "C" {

vca_status vca_graph_from_text(const char* text, vca_graph** out) {
    return guarded([&] { *out = new vca_graph{vca::parse_graph(text ? text : "")}; });
}

vca_status vca_graph_generate(const char* spec, vca_graph** out) {
    return guarded([&] { *out = new vca_graph{vca::generate(spec ? spec : "")}; });
}

vca_status vca_graph_to_text(const vca_graph* g, char** out) {
    return guarded([&] { *out = dup_string(vca::write_graph(g->g)); });
}

void vca_graph_free(vca_graph* g) { delete g; }

vca_status vca_analyze_json(const vca_graph* g, int kmax, int m_max, int workers,
                            char** out) {
    return guarded([&] {
        vca::AlgebraReport r =
            vca::analyze(g->g, dflt(kmax, 12), dflt(m_max, 4), dflt(workers, 1));
        *out = dup_string(vca::report_to_json(g->g, r).dump(2));
    });
}

vca_status vca_analyze_text(const vca_graph* g, int kmax, int m_max, int workers,
                            char** out) {
    return guarded([&] {
        vca::AlgebraReport r =
            vca::analyze(g->g, dflt(kmax, 12), dflt(m_max, 4), dflt(workers, 1));
        *out = dup_string(vca::report_to_text(g->g, r));
    });
}

vca_status vca_covers_json(const vca_graph* g, int k, char** out) {
    return guarded([&] {
        *out = dup_string(vca::covers_to_json(vca::enumerate_basic(g->g, k)).dump(2));
    });
}

vca_status vca_gdim_json(const vca_graph* g, char** out) {
    return guarded([&] {
        *out = dup_string(vca::gdim_to_json(g->g, vca::gdim(g->g)).dump(2));
    });
}

vca_status vca_gdim_render(const vca_graph* g, char** out) {
    return guarded([&] {
        vca::GdimResult r = vca::gdim(g->g);
        *out = dup_string("gdim: " + std::to_string(r.gdim) + "\n" +
                          vca::render_drawing(g->g, r.witness));
    });
}

vca_status vca_hilbert_json(const vca_graph* g, int kmax, int workers, char** out) {
    return guarded([&] {
        *out = dup_string(
            vca::hilbert_to_json(
                vca::hilbert_function(g->g, dflt(kmax, 12), dflt(workers, 1)))
                .dump(2));
    });
}

vca_status vca_hilbert_text(const vca_graph* g, int kmax, int workers, char** out) {
    return guarded([&] {
        *out = dup_string(vca::hilbert_to_text(
            vca::hilbert_function(g->g, dflt(kmax, 12), dflt(workers, 1))));
    });
}

vca_status vca_lattice_json(const vca_graph* g, char** out) {
    return guarded([&] {
        vca::StripResult s = vca::strip_isolated(g->g);
        *out = dup_string(vca::lattice_to_json(vca::build_lattice(s.graph)).dump(2));
    });
}

vca_status vca_hypergraph_from_text(const char* text, vca_hypergraph** out) {
    return guarded(
        [&] { *out = new vca_hypergraph{vca::parse_hypergraph(text ? text : "")}; });
}

void vca_hypergraph_free(vca_hypergraph* h) { delete h; }

vca_status vca_hypergraph_report_json(const vca_hypergraph* h, int kmax,
                                      unsigned long long box_budget, char** out) {
    return guarded([&] {
        unsigned long long budget = box_budget ? box_budget : 100000000ULL;
        vca::DegreeBoundsReport rep =
            vca::degree_bounds_check(h->h, dflt(kmax, 12), budget);
        *out = dup_string(vca::hypergraph_report_to_json(h->h, rep).dump(2));
    });
}

int vca_verify(vca_line_cb cb, void* user) {
    return vca::run_verification([&](const std::string& line) {
        if (cb) cb(line.c_str(), user);
    });
}

void vca_string_free(char* s) { std::free(s); }

const char* vca_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
