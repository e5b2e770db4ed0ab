#include "vca/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace vca {

int WeightedHypergraph::max_face_size() const {
    int m = 0;
    for (const auto& f : faces) m = std::max(m, static_cast<int>(f.size()));
    return m;
}

WeightedHypergraph WeightedHypergraph::create(int n, std::vector<std::vector<int>> faces,
                                              std::vector<int> weights) {
    if (n < 1) throw InvalidParameters("hypergraph needs at least one vertex");
    if (faces.size() != weights.size())
        throw LengthMismatch("faces and weights differ in length");
    for (auto& f : faces) {
        if (f.empty()) throw InvalidParameters("empty face");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= n) throw InvalidVertexId("face vertex out of range");
    }
    for (int w : weights)
        if (w < 1) throw InvalidParameters("weights must be >= 1");
    for (size_t i = 0; i < faces.size(); ++i)
        for (size_t j = 0; j < faces.size(); ++j) {
            if (i == j) continue;
            if (std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                              faces[i].end()))
                throw InvalidParameters("faces must form an antichain");
        }
    WeightedHypergraph h;
    h.n = n;
    h.faces = std::move(faces);
    h.weights = std::move(weights);
    return h;
}

bool is_k_cover(const WeightedHypergraph& h, const std::vector<int>& a, int k) {
    if (static_cast<int>(a.size()) != h.n) throw LengthMismatch("vector length mismatch");
    bool nonzero = false;
    for (int v : a) {
        if (v < 0) return false;
        if (v > 0) nonzero = true;
    }
    if (!nonzero) return false;
    for (size_t f = 0; f < h.faces.size(); ++f) {
        long long s = 0;
        for (int v : h.faces[f]) s += a[v];
        if (s < static_cast<long long>(k) * h.weights[f]) return false;
    }
    return true;
}

namespace {

bool basic_h(const WeightedHypergraph& h, const std::vector<int>& a, int k) {
    for (int i = 0; i < h.n; ++i) {
        if (a[i] < 1) continue;
        std::vector<int> dec = a;
        --dec[i];
        if (is_k_cover(h, dec, k)) return false;
    }
    return true;
}

struct HEnumerator {
    const WeightedHypergraph& h;
    int k;
    std::vector<int> box;                    // inclusive upper bound per vertex
    std::vector<std::vector<int>> at_vertex; // face indices through each vertex
    std::vector<long long> need;             // k * weight per face
    std::vector<long long> slack;            // assigned-so-far minus need, plus max future
    std::vector<int> a;
    std::vector<Cover> found;

    HEnumerator(const WeightedHypergraph& hg, int deg) : h(hg), k(deg) {
        box.assign(h.n, 0);
        at_vertex.assign(h.n, {});
        for (size_t f = 0; f < h.faces.size(); ++f)
            for (int v : h.faces[f]) {
                at_vertex[v].push_back(static_cast<int>(f));
                box[v] = std::max(box[v], k * h.weights[f]);
            }
        need.resize(h.faces.size());
        slack.resize(h.faces.size());
        for (size_t f = 0; f < h.faces.size(); ++f) {
            need[f] = static_cast<long long>(k) * h.weights[f];
            long long cap = 0;
            for (int v : h.faces[f]) cap += box[v];
            slack[f] = cap - need[f];  // taking a_v = box[v] for all unassigned v
        }
        a.assign(h.n, 0);
    }

    void dfs(int i) {
        if (i == h.n) {
            if (std::any_of(a.begin(), a.end(), [](int x) { return x > 0; }) &&
                basic_h(h, a, k))
                found.push_back({k, a});
            return;
        }
        for (int val = 0; val <= box[i]; ++val) {
            a[i] = val;
            bool ok = true;
            for (int f : at_vertex[i]) {
                slack[f] -= box[i] - val;
                if (slack[f] < 0) ok = false;
            }
            if (ok) dfs(i + 1);
            for (int f : at_vertex[i]) slack[f] += box[i] - val;
        }
        a[i] = 0;
    }
};

}  // namespace

CoverSet enumerate_basic_h(const WeightedHypergraph& h, int k,
                           unsigned long long box_budget) {
    if (k < 1) throw InvalidParameters("k must be >= 1");
    if (h.faces.empty()) throw NoFaces("hypergraph has no faces");
    HEnumerator en(h, k);
    unsigned long long volume = 1;
    for (int v = 0; v < h.n; ++v) {
        volume *= static_cast<unsigned long long>(en.box[v]) + 1;
        if (volume > box_budget) throw Budget("enumeration box exceeds the budget");
    }
    en.dfs(0);
    CoverSet out;
    out.k = k;
    out.covers = std::move(en.found);
    std::sort(out.covers.begin(), out.covers.end(),
              [](const Cover& x, const Cover& y) { return x.values < y.values; });
    return out;
}

DegreeBoundsReport degree_bounds_check(const WeightedHypergraph& h, int kmax,
                                       unsigned long long box_budget) {
    if (kmax < 1) throw InvalidParameters("kmax must be >= 1");
    DegreeBoundsReport rep;
    rep.kmax = kmax;
    for (int k = 1; k <= kmax; ++k)
        rep.counts.push_back(
            static_cast<long long>(enumerate_basic_h(h, k, box_budget).count()));
    int M = h.max_face_size();
    rep.lower = M - 1;
    rep.upper = (h.n - 1) - (h.n - 1) / M;
    const int window = 3;
    for (int period = 1; period <= 4 && !rep.stable; ++period) {
        int degree = -1;
        bool all_ok = true;
        for (int r = 0; r < period && all_ok; ++r) {
            std::vector<long long> seq;
            for (int k = 1 + r; k <= kmax; k += period) seq.push_back(rep.counts[k - 1]);
            bool ok = false;
            for (int d = 0; static_cast<int>(seq.size()) - d >= window; ++d) {
                std::vector<long long> cur = seq;
                for (int t = 0; t < d; ++t) {
                    std::vector<long long> next(cur.size() - 1);
                    for (size_t i = 0; i + 1 < cur.size(); ++i) next[i] = cur[i + 1] - cur[i];
                    cur = std::move(next);
                }
                size_t m = cur.size();
                if (cur[m - 1] == cur[m - 2] && cur[m - 2] == cur[m - 3]) {
                    degree = std::max(degree, d);
                    ok = true;
                    break;
                }
            }
            all_ok = ok;
        }
        if (all_ok) {
            rep.stable = true;
            rep.period = period;
            rep.degree = degree;
        }
    }
    if (rep.stable)
        rep.within_bounds = rep.lower <= rep.degree && rep.degree <= rep.upper;
    return rep;
}

WeightedHypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> faces;
    std::vector<int> weights;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "n") {
            if (n != -1 || !(ls >> n))
                throw ParseError("line " + std::to_string(lineno) + ": bad n line");
        } else if (tag == "f") {
            if (n == -1)
                throw ParseError("line " + std::to_string(lineno) + ": f before n");
            int w;
            if (!(ls >> w))
                throw ParseError("line " + std::to_string(lineno) + ": missing weight");
            std::vector<int> face;
            int v;
            while (ls >> v) {
                if (v < 1 || v > n)
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": vertex out of range");
                face.push_back(v - 1);
            }
            if (face.empty())
                throw ParseError("line " + std::to_string(lineno) + ": empty face");
            faces.push_back(std::move(face));
            weights.push_back(w);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
    }
    if (n == -1) throw ParseError("missing n line");
    return WeightedHypergraph::create(n, std::move(faces), std::move(weights));
}

std::string write_hypergraph(const WeightedHypergraph& h) {
    std::ostringstream out;
    out << "n " << h.n << "\n";
    for (size_t f = 0; f < h.faces.size(); ++f) {
        out << "f " << h.weights[f];
        for (int v : h.faces[f]) out << " " << v + 1;
        out << "\n";
    }
    return out.str();
}

}  // namespace vca
