#include "vca/covers.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace vca {

namespace {

void check_length(const BipartiteGraph& g, const Cover& c) {
    if (static_cast<int>(c.values.size()) != g.vertex_count())
        throw LengthMismatch("cover length " + std::to_string(c.values.size()) +
                             " does not match vertex count " +
                             std::to_string(g.vertex_count()));
}

}  // namespace

Cover sum(const Cover& c1, const Cover& c2) {
    if (c1.values.size() != c2.values.size())
        throw LengthMismatch("cover lengths differ");
    Cover out{c1.k + c2.k, c1.values};
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += c2.values[i];
    return out;
}

bool is_cover(const BipartiteGraph& g, const Cover& c) {
    check_length(g, c);
    bool nonzero = false;
    for (int v : c.values) {
        if (v < 0) return false;
        if (v > 0) nonzero = true;
    }
    if (!nonzero) return false;
    for (auto [u, v] : g.edges())
        if (c.values[u] + c.values[v] < c.k) return false;
    return true;
}

std::vector<int> lop_positions(const BipartiteGraph& g, const Cover& c) {
    if (!is_cover(g, c)) throw NotACover("not a k-cover");
    std::vector<int> out;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (c.values[i] < 1) continue;
        if (g.is_isolated(i)) {
            // decrementing an isolated positive entry always leaves a cover
            // unless the whole vector would become zero with k >= 1
            Cover dec = c;
            --dec.values[i];
            bool nonzero = std::any_of(dec.values.begin(), dec.values.end(),
                                       [](int x) { return x > 0; });
            if (nonzero || dec.k == 0) out.push_back(i);
            continue;
        }
        bool slack_everywhere = true;
        for (int j : g.neighbors(i))
            if (c.values[i] + c.values[j] <= c.k) {
                slack_everywhere = false;
                break;
            }
        if (slack_everywhere) out.push_back(i);
    }
    return out;
}

bool is_basic(const BipartiteGraph& g, const Cover& c) {
    return lop_positions(g, c).empty();
}

bool b_side_completion(const BipartiteGraph& g, const std::vector<int>& a_values,
                       int k, Cover& out) {
    out.k = k;
    out.values.assign(g.vertex_count(), 0);
    auto a_ids = g.a_side();
    if (static_cast<int>(a_values.size()) != static_cast<int>(a_ids.size()))
        throw LengthMismatch("A-side assignment has wrong length");
    for (size_t i = 0; i < a_ids.size(); ++i) {
        if (a_values[i] < 0 || a_values[i] > k) return false;
        out.values[a_ids[i]] = a_values[i];
    }
    for (int j : g.b_side()) {
        if (g.is_isolated(j))
            throw InvalidParameters("b_side_completion requires no isolated B-vertices");
        int mn = std::numeric_limits<int>::max();
        for (int i : g.neighbors(j)) mn = std::min(mn, out.values[i]);
        out.values[j] = k - mn;
    }
    return is_cover(g, out) && is_basic(g, out);
}

namespace {

// Depth-first enumeration state over the A-side of a graph with no isolated
// vertices. B values are forced (k - min over assigned neighbors); an A-vertex
// with a positive value must attain the minimum at some neighbor once all of
// that neighbor's A-ends are fixed, otherwise the branch dies.
struct Enumerator {
    const BipartiteGraph& g;
    int k;
    std::vector<int> a_order;              // A ids, decreasing degree
    std::vector<int> a_pos;                // vertex -> index in a_order, -1 for B
    std::vector<int> value;                // per vertex, -1 = unassigned
    std::vector<int> rem;                  // per B vertex: unassigned A-neighbors
    std::vector<int> curmin;               // per B vertex: min over assigned neighbors
    std::vector<int> pending_b;            // per A vertex: incomplete B-neighbors
    std::vector<int> tight_count;          // per A vertex: complete B-neighbors where it is min
    std::vector<Cover> found;

    explicit Enumerator(const BipartiteGraph& graph, int degree) : g(graph), k(degree) {
        int n = g.vertex_count();
        value.assign(n, -1);
        rem.assign(n, 0);
        curmin.assign(n, std::numeric_limits<int>::max());
        pending_b.assign(n, 0);
        tight_count.assign(n, 0);
        a_pos.assign(n, -1);
        for (int v : g.a_side()) a_order.push_back(v);
        std::stable_sort(a_order.begin(), a_order.end(), [&](int x, int y) {
            return g.degree(x) > g.degree(y);
        });
        for (size_t i = 0; i < a_order.size(); ++i) a_pos[a_order[i]] = static_cast<int>(i);
        for (int j : g.b_side()) rem[j] = g.degree(j);
        for (int i : a_order) pending_b[i] = g.degree(i);
    }

    bool complete_b(int j) const { return rem[j] == 0; }

    void run() { dfs(0); }

    void dfs(size_t depth) {
        if (depth == a_order.size()) {
            emit();
            return;
        }
        int i = a_order[depth];
        for (int val = 0; val <= k; ++val) {
            if (assign(i, val))
                dfs(depth + 1);
            unassign(i, val);
        }
    }

    // Returns false when the partial assignment is already dead. State
    // changes are fully undone by unassign either way.
    bool assign(int i, int val) {
        value[i] = val;
        bool ok = true;
        for (int j : g.neighbors(i)) {
            curmin[j] = std::min(curmin[j], val);
            if (--rem[j] > 0) continue;
            // neighbor j just completed: record tightness for its A-ends
            for (int i2 : g.neighbors(j)) {
                if (value[i2] == curmin[j]) ++tight_count[i2];
                if (--pending_b[i2] == 0 && value[i2] >= 1 && tight_count[i2] == 0)
                    ok = false;
            }
        }
        return ok;
    }

    void unassign(int i, int val) {
        for (int j : g.neighbors(i)) {
            if (rem[j] == 0) {
                for (int i2 : g.neighbors(j)) {
                    if (value[i2] == curmin[j]) --tight_count[i2];
                    ++pending_b[i2];
                }
            }
            ++rem[j];
            if (curmin[j] == val) {
                int mn = std::numeric_limits<int>::max();
                for (int i2 : g.neighbors(j))
                    if (value[i2] >= 0 && i2 != i) mn = std::min(mn, value[i2]);
                curmin[j] = mn;
            }
        }
        value[i] = -1;
    }

    void emit() {
        Cover c;
        c.k = k;
        c.values.assign(g.vertex_count(), 0);
        for (int i : a_order) c.values[i] = value[i];
        for (int j : g.b_side()) c.values[j] = k - curmin[j];
        found.push_back(std::move(c));
    }
};

}  // namespace

CoverSet enumerate_basic(const BipartiteGraph& g, int k) {
    if (k < 1) throw InvalidParameters("enumerate_basic requires k >= 1");
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    StripResult stripped = strip_isolated(g);
    Enumerator en(stripped.graph, k);
    en.run();
    CoverSet out;
    out.k = k;
    out.covers.reserve(en.found.size());
    for (const Cover& c : en.found) {
        Cover full;
        full.k = k;
        full.values.assign(g.vertex_count(), 0);
        for (int v = 0; v < stripped.graph.vertex_count(); ++v)
            full.values[stripped.old_id[v]] = c.values[v];
        out.covers.push_back(std::move(full));
    }
    std::sort(out.covers.begin(), out.covers.end(),
              [](const Cover& a, const Cover& b) { return a.values < b.values; });
    return out;
}

std::vector<Cover> decompose_into_one_covers(const BipartiteGraph& g, const Cover& c) {
    if (c.k < 1) throw InvalidParameters("decomposition needs k >= 1");
    if (!is_cover(g, c) || !is_basic(g, c)) throw NotBasic("input is not a basic k-cover");
    if (c.k == 1) return {c};
    const CoverSet ones = enumerate_basic(g, 1);
    std::vector<Cover> chosen;
    std::vector<int> rest = c.values;
    auto fits = [&](const Cover& one, int k_left) {
        for (size_t v = 0; v < rest.size(); ++v)
            if (one.values[v] > rest[v]) return false;
        // remainder must still be a (k_left - 1)-cover
        for (auto [u, w] : g.edges())
            if (rest[u] - one.values[u] + rest[w] - one.values[w] < k_left - 1) return false;
        return true;
    };
    auto dfs = [&](auto&& self, int k_left, int start) -> bool {
        if (k_left == 0)
            return std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; });
        for (int idx = start; idx < ones.count(); ++idx) {
            const Cover& one = ones.covers[idx];
            if (!fits(one, k_left)) continue;
            for (size_t v = 0; v < rest.size(); ++v) rest[v] -= one.values[v];
            chosen.push_back(one);
            if (self(self, k_left - 1, idx)) return true;
            chosen.pop_back();
            for (size_t v = 0; v < rest.size(); ++v) rest[v] += one.values[v];
        }
        return false;
    };
    if (!dfs(dfs, c.k, 0))
        throw DecompositionNotFound(
            "no decomposition into basic 1-covers found; this should be impossible "
            "for a validated bipartite input and must be reported");
    return chosen;
}

std::string write_cover(const Cover& c) {
    std::ostringstream out;
    out << c.k;
    for (int v : c.values) out << " " << v;
    return out.str();
}

Cover parse_cover(const std::string& text) {
    std::istringstream in(text);
    Cover c;
    if (!(in >> c.k)) throw ParseError("cover text must start with k");
    int v;
    while (in >> v) c.values.push_back(v);
    if (c.values.empty()) throw ParseError("cover text has no values");
    return c;
}

}  // namespace vca
