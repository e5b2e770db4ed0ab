#include "vca/report.hpp"

#include <sstream>

namespace vca {

namespace {

json cover_values(const Cover& c) { return json(c.values); }

}  // namespace

json covers_to_json(const CoverSet& cs) {
    json j;
    j["k"] = cs.k;
    j["count"] = cs.count();
    json arr = json::array();
    for (const Cover& c : cs.covers) arr.push_back(cover_values(c));
    j["covers"] = std::move(arr);
    return j;
}

json drawing_to_json(const BipartiteGraph& g, const StandardDrawing& d) {
    json j;
    json sigma = json::array(), tau = json::array();
    for (int v : d.sigma) sigma.push_back(v + 1);
    for (int v : d.tau) tau.push_back(v + 1);
    j["sigma"] = std::move(sigma);
    j["tau"] = std::move(tau);
    j["r"] = r_of(g, d);
    return j;
}

json gdim_to_json(const BipartiteGraph& g, const GdimResult& r) {
    json j;
    j["gdim"] = r.gdim;
    j["component_gdims"] = json(r.component_gdims);
    j["drawing"] = drawing_to_json(g, r.witness);
    j["nodes"] = r.nodes;
    return j;
}

json hilbert_to_json(const HilbertProfile& p) {
    json j;
    j["kmax"] = p.kmax;
    j["counts"] = json(p.counts);
    j["stable"] = p.stable;
    j["window"] = p.window;
    if (p.stable) {
        j["degree"] = p.stabilized_degree;
        j["dim"] = p.dim;
        j["multiplicity"] = p.multiplicity;
    } else {
        j["degree"] = nullptr;
        j["dim"] = nullptr;
        j["multiplicity"] = nullptr;
    }
    return j;
}

json lattice_to_json(const CoverLattice& l) {
    json j;
    json elems = json::array();
    for (const Cover& c : l.elements) elems.push_back(cover_values(c));
    j["elements"] = std::move(elems);
    json hasse = json::array();
    for (auto [lo, hi] : l.hasse) hasse.push_back(json::array({lo, hi}));
    j["hasse"] = std::move(hasse);
    j["rank"] = l.rank;
    j["maximal_chain_count"] = l.maximal_chain_count.str();
    return j;
}

json report_to_json(const BipartiteGraph& g, const AlgebraReport& r) {
    json j;
    j["wsc"] = r.wsc;
    j["domain"] = r.domain;
    j["unmixed"] = r.unmixed;
    j["a"] = r.a;
    j["b"] = r.b;
    j["hilbert"] = hilbert_to_json(r.hilbert);
    if (r.hilbert.stable) {
        j["dim_estimate"] = r.hilbert.dim;
        j["multiplicity_estimate"] = r.hilbert.multiplicity;
        j["dim_range"] = nullptr;
        j["gdim_equals_dim"] = (r.gdim == r.hilbert.dim);
    } else {
        j["dim_estimate"] = nullptr;
        j["multiplicity_estimate"] = nullptr;
        j["dim_range"] = json::array({r.gdim, r.a + 1});
        j["gdim_equals_dim"] = nullptr;
    }
    j["gdim"] = r.gdim;
    j["dim_upper_bounds"] = json{{"a_plus_1", r.dim_upper_a_plus_1},
                                 {"degree", r.dim_upper_degree}};
    if (r.zero_divisor) {
        json w = json::array();
        for (const Cover& c : *r.zero_divisor) w.push_back(cover_values(c));
        j["zero_divisor_witness"] = std::move(w);
    } else {
        j["zero_divisor_witness"] = nullptr;
    }
    j["depth_witness"] =
        json::array({cover_values(r.depth.first), cover_values(r.depth.second)});
    if (!r.ara_bounds.empty()) {
        j["ara_upper_bound"] = json{{"bound", r.ara_bounds.front().bound},
                                    {"provenance", r.ara_bounds.front().provenance}};
    } else {
        j["ara_upper_bound"] = nullptr;
    }
    json all = json::array();
    for (const AraBound& b : r.ara_bounds)
        all.push_back(json{{"bound", b.bound}, {"provenance", b.provenance}});
    j["ara_upper_bounds"] = std::move(all);
    if (r.unmixed) {
        StripResult s = strip_isolated(g);
        j["lattice"] = lattice_to_json(build_lattice(s.graph));
    } else {
        j["lattice"] = nullptr;
    }
    return j;
}

json hypergraph_report_to_json(const WeightedHypergraph& h, const DegreeBoundsReport& r) {
    json j;
    j["n"] = h.n;
    json faces = json::array();
    for (size_t f = 0; f < h.faces.size(); ++f) {
        json face;
        face["weight"] = h.weights[f];
        json vs = json::array();
        for (int v : h.faces[f]) vs.push_back(v + 1);
        face["vertices"] = std::move(vs);
        faces.push_back(std::move(face));
    }
    j["faces"] = std::move(faces);
    j["kmax"] = r.kmax;
    j["counts"] = json(r.counts);
    j["degree_bounds"] = json{{"stable", r.stable},
                              {"period", r.stable ? json(r.period) : json(nullptr)},
                              {"degree", r.stable ? json(r.degree) : json(nullptr)},
                              {"lower", r.lower},
                              {"upper", r.upper},
                              {"within_bounds", r.stable ? json(r.within_bounds) : json(nullptr)}};
    return j;
}

std::string hilbert_to_text(const HilbertProfile& p) {
    std::ostringstream out;
    out << "k:  ";
    for (int k = 1; k <= p.kmax; ++k) out << " " << k;
    out << "\nHF: ";
    for (long long c : p.counts) out << " " << c;
    out << "\n";
    if (p.stable)
        out << "stable: degree " << p.stabilized_degree << ", dim " << p.dim
            << ", multiplicity " << p.multiplicity << "\n";
    else
        out << "not stable at kmax " << p.kmax << "; increase --kmax\n";
    return out.str();
}

std::string report_to_text(const BipartiteGraph& g, const AlgebraReport& r) {
    std::ostringstream out;
    out << "vertices: " << g.vertex_count() << " (a=" << r.a << ", b=" << r.b
        << "), edges: " << g.edge_count() << "\n";
    out << "wsc / domain: " << (r.wsc ? "yes" : "no") << "\n";
    out << "unmixed: " << (r.unmixed ? "yes" : "no") << "\n";
    out << hilbert_to_text(r.hilbert);
    out << "gdim: " << r.gdim << "\n";
    if (r.hilbert.stable) {
        if (r.gdim < r.hilbert.dim)
            out << "note: gdim < dim on this graph (noteworthy instance)\n";
    } else {
        out << "dim range: [" << r.gdim << ", " << r.a + 1 << "]\n";
    }
    out << "dim upper bounds: a+1 = " << r.dim_upper_a_plus_1
        << ", degree bound = " << r.dim_upper_degree << "\n";
    if (r.zero_divisor) {
        out << "zero-divisor witness (basic 1-covers summing to a non-basic cover):\n";
        for (const Cover& c : *r.zero_divisor) out << "  " << write_cover(c) << "\n";
    } else {
        out << "zero-divisor witness: none\n";
    }
    out << "depth witness: " << write_cover(r.depth.first) << " / "
        << write_cover(r.depth.second) << "\n";
    out << "ara upper bounds:";
    for (const AraBound& b : r.ara_bounds)
        out << " " << b.bound << " (" << b.provenance << ")";
    out << "\n";
    return out.str();
}

}  // namespace vca
