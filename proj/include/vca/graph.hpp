#ifndef VCA_GRAPH_HPP
#define VCA_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vca/errors.hpp"
#include "vca/poset.hpp"

namespace vca {

/// Validated bipartite graph. Vertices are 0-based internally; all text I/O
/// is 1-based. Immutable after construction.
class BipartiteGraph {
public:
    /// Validates the edge list, 2-colors the graph and fixes the global A/B
    /// sides. Duplicate edges collapse; self loops are rejected.
    static BipartiteGraph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool is_isolated(int v) const { return adj_[v].empty(); }
    bool has_edge(int u, int v) const;
    bool in_a(int v) const { return side_[v] == 0; }

    /// A side (|A| <= |B|; on a tie, vertex 0's side), ascending ids.
    std::vector<int> a_side() const;
    std::vector<int> b_side() const;

    int component_of(int v) const { return comp_[v]; }
    int component_count() const { return comp_count_; }
    /// Vertices of one component, ascending ids.
    std::vector<int> component_vertices(int c) const;
    bool connected() const { return comp_count_ == 1; }
    bool acyclic() const { return acyclic_; }
    bool is_tree() const { return comp_count_ == 1 && acyclic_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // (min,max), sorted, unique
    std::vector<std::vector<int>> adj_;
    std::vector<char> side_;  // 0 = A, 1 = B
    std::vector<int> comp_;
    int comp_count_ = 0;
    bool acyclic_ = true;
    std::vector<uint64_t> adj_bits_;  // n x n bit matrix, row-major
};

/// Removes isolated vertices and renumbers the rest, order preserving.
struct StripResult {
    BipartiteGraph graph;
    std::vector<int> removed;   // original ids of dropped vertices
    std::vector<int> old_id;    // old_id[new] = original id
    std::vector<int> new_id;    // new_id[old] = new id, or -1 if removed
};

StripResult strip_isolated(const BipartiteGraph& g);

// ---- generators ----------------------------------------------------------

BipartiteGraph make_cycle(int len);               // even, >= 4
BipartiteGraph make_path(int n);                  // n >= 2 vertices
BipartiteGraph make_complete(int a, int b);       // K_{a,b}
BipartiteGraph make_caterpillar(int r, int a, int b);  // 2 <= r <= a <= b
BipartiteGraph make_regular(int a);               // K_{a,a} minus a perfect matching, a >= 2
BipartiteGraph whisker(const BipartiteGraph& base_tree);
BipartiteGraph poset_graph(const FinitePoset& p);
BipartiteGraph random_bipartite(int a, int b, double p, uint64_t seed);
BipartiteGraph random_tree(int n, uint64_t seed);
BipartiteGraph disjoint_union(const BipartiteGraph& g1, const BipartiteGraph& g2);

/// Parses a generator spec like "cycle 6", "complete 2 3",
/// "caterpillar 4 6 6", "regular 3", "whisker-path 3", "random 4 5 0.5 7".
BipartiteGraph generate(const std::string& spec);

// ---- text format ---------------------------------------------------------
// Lines; '#' starts a comment; "n <count>" then "e <u> <v>" (1-based).

BipartiteGraph parse_graph(const std::string& text);
std::string write_graph(const BipartiteGraph& g);

/// Brute-force isomorphism test for small graphs (test/oracle helper).
bool isomorphic_brute(const BipartiteGraph& g1, const BipartiteGraph& g2);

/// splitmix64 step; the seeded PRNG behind the random generators.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace vca

#endif
