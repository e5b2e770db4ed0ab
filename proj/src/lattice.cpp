#include "vca/lattice.hpp"

#include <algorithm>
#include <array>

#include "vca/algebra.hpp"

namespace vca {

namespace {

int find_element(const CoverLattice& l, const std::vector<int>& values) {
    for (size_t i = 0; i < l.elements.size(); ++i)
        if (l.elements[i].values == values) return static_cast<int>(i);
    return -1;
}

void finish_lattice(CoverLattice& l) {
    int n = static_cast<int>(l.elements.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !l.leq[i][j] || !l.leq[j][i]) continue;
            throw ClosureViolation("order relation is not antisymmetric");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !l.leq[i][j]) continue;
            bool covering = true;
            for (int z = 0; z < n; ++z)
                if (z != i && z != j && l.leq[i][z] && l.leq[z][j]) {
                    covering = false;
                    break;
                }
            if (covering) l.hasse.emplace_back(i, j);
        }
    auto [rank, chains] = rank_and_chains(l);
    l.rank = rank;
    l.maximal_chain_count = chains;
}

}  // namespace

Cover lattice_join(const BipartiteGraph& g, const Cover& a, const Cover& b) {
    if (a.values.size() != b.values.size()) throw LengthMismatch("cover lengths differ");
    Cover out{1, a.values};
    for (size_t v = 0; v < out.values.size(); ++v)
        out.values[v] = g.in_a(static_cast<int>(v)) ? std::max(a.values[v], b.values[v])
                                                    : std::min(a.values[v], b.values[v]);
    return out;
}

Cover lattice_meet(const BipartiteGraph& g, const Cover& a, const Cover& b) {
    if (a.values.size() != b.values.size()) throw LengthMismatch("cover lengths differ");
    Cover out{1, a.values};
    for (size_t v = 0; v < out.values.size(); ++v)
        out.values[v] = g.in_a(static_cast<int>(v)) ? std::min(a.values[v], b.values[v])
                                                    : std::max(a.values[v], b.values[v]);
    return out;
}

CoverLattice build_lattice(const BipartiteGraph& g) {
    if (g.edge_count() == 0) throw NoEdges("graph has no edges");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_isolated(v))
            throw InvalidParameters("build_lattice requires no isolated vertices");
    if (!is_unmixed(g)) throw NotUnmixed("graph is not unmixed");
    if (g.a_side().size() != g.b_side().size())
        throw NotUnmixed("unmixed graph must have equal sides");

    CoverLattice l;
    l.elements = enumerate_basic(g, 1).covers;
    int n = static_cast<int>(l.elements.size());
    l.leq.assign(n, std::vector<char>(n, 0));
    auto a_ids = g.a_side();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool le = true;
            for (int v : a_ids)
                if (l.elements[i].values[v] > l.elements[j].values[v]) {
                    le = false;
                    break;
                }
            l.leq[i][j] = le;
        }

    // closure: joins and meets must land on basic 1-covers
    std::vector<std::vector<int>> join_idx(n, std::vector<int>(n)),
        meet_idx(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cover jn = lattice_join(g, l.elements[i], l.elements[j]);
            Cover mt = lattice_meet(g, l.elements[i], l.elements[j]);
            join_idx[i][j] = find_element(l, jn.values);
            meet_idx[i][j] = find_element(l, mt.values);
            if (join_idx[i][j] < 0 || meet_idx[i][j] < 0)
                throw ClosureViolation("join or meet of basic 1-covers is not basic");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (meet_idx[a][join_idx[b][c]] !=
                    join_idx[meet_idx[a][b]][meet_idx[a][c]])
                    throw ClosureViolation("lattice of basic 1-covers is not distributive");

    finish_lattice(l);
    return l;
}

std::pair<int, BigInt> rank_and_chains(const CoverLattice& l) {
    int n = static_cast<int>(l.elements.size());
    std::vector<std::vector<int>> up(n);
    std::vector<int> indeg(n, 0);
    for (auto [lo, hi] : l.hasse) {
        up[lo].push_back(hi);
        ++indeg[hi];
    }
    std::vector<int> order, d(indeg);
    for (int v = 0; v < n; ++v)
        if (d[v] == 0) order.push_back(v);
    for (size_t head = 0; head < order.size(); ++head)
        for (int w : up[order[head]])
            if (--d[w] == 0) order.push_back(w);
    std::vector<int> longest(n, 1);
    std::vector<BigInt> paths(n);
    for (int v : order) paths[v] = (indeg[v] == 0) ? 1 : 0;
    for (int v : order)
        for (int w : up[v]) {
            longest[w] = std::max(longest[w], longest[v] + 1);
            paths[w] += paths[v];
        }
    int rank = 0;
    BigInt chains = 0;
    for (int v = 0; v < n; ++v) {
        rank = std::max(rank, longest[v]);
        if (up[v].empty()) chains += paths[v];
    }
    return {rank, chains};
}

std::vector<std::array<int, 4>> hibi_relations(const CoverLattice& l) {
    std::vector<std::array<int, 4>> out;
    int n = static_cast<int>(l.elements.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (l.leq[i][j] || l.leq[j][i]) continue;
            // join = least common upper bound, meet dually
            int jn = -1, mt = -1;
            for (int z = 0; z < n; ++z) {
                if (l.leq[i][z] && l.leq[j][z] && (jn == -1 || l.leq[z][jn])) jn = z;
                if (l.leq[z][i] && l.leq[z][j] && (mt == -1 || l.leq[mt][z])) mt = z;
            }
            if (jn < 0 || mt < 0) throw ClosureViolation("incomparable pair without bounds");
            for (size_t v = 0; v < l.elements[i].values.size(); ++v)
                if (l.elements[i].values[v] + l.elements[j].values[v] !=
                    l.elements[jn].values[v] + l.elements[mt].values[v])
                    throw ClosureViolation("hibi identity a + b = (a v b) + (a ^ b) failed");
            out.push_back({i, j, jn, mt});
        }
    return out;
}

CoverLattice poset_ideals(const FinitePoset& p) {
    if (p.m > 25) throw InvalidParameters("poset too large for ideal enumeration");
    CoverLattice l;
    for (uint32_t mask = 0; mask < (1u << p.m); ++mask) {
        bool down = true;
        for (int j = 0; j < p.m && down; ++j) {
            if (!(mask >> j & 1)) continue;
            for (int i = 0; i < p.m; ++i)
                if (p.less_eq(i, j) && !(mask >> i & 1)) {
                    down = false;
                    break;
                }
        }
        if (!down) continue;
        Cover c;
        c.k = 1;
        c.values.assign(p.m, 0);
        for (int i = 0; i < p.m; ++i) c.values[i] = mask >> i & 1;
        l.elements.push_back(std::move(c));
    }
    std::sort(l.elements.begin(), l.elements.end(),
              [](const Cover& a, const Cover& b) { return a.values < b.values; });
    int n = static_cast<int>(l.elements.size());
    l.leq.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool le = true;
            for (int v = 0; v < p.m; ++v)
                if (l.elements[i].values[v] > l.elements[j].values[v]) {
                    le = false;
                    break;
                }
            l.leq[i][j] = le;
        }
    finish_lattice(l);
    return l;
}

bool gorenstein_test(const FinitePoset& p) {
    return p.is_pure();
}

namespace {

struct IsoSearch {
    const CoverLattice& l1;
    const CoverLattice& l2;
    int n;
    std::vector<int> map;       // l1 index -> l2 index
    std::vector<char> used;

    bool compatible(int i, int t) const {
        for (int j = 0; j < n; ++j) {
            if (map[j] < 0) continue;
            if (l1.leq[i][j] != l2.leq[t][map[j]]) return false;
            if (l1.leq[j][i] != l2.leq[map[j]][t]) return false;
        }
        return true;
    }

    bool dfs(int i) {
        if (i == n) return true;
        for (int t = 0; t < n; ++t) {
            if (used[t] || !compatible(i, t)) continue;
            map[i] = t;
            used[t] = 1;
            if (dfs(i + 1)) return true;
            map[i] = -1;
            used[t] = 0;
        }
        return false;
    }
};

}  // namespace

bool order_isomorphic(const CoverLattice& l1, const CoverLattice& l2) {
    if (l1.elements.size() != l2.elements.size()) return false;
    int n = static_cast<int>(l1.elements.size());
    IsoSearch s{l1, l2, n, std::vector<int>(n, -1), std::vector<char>(n, 0)};
    return s.dfs(0);
}

}  // namespace vca
