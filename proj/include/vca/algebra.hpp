#ifndef VCA_ALGEBRA_HPP
#define VCA_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "vca/covers.hpp"
#include "vca/graph.hpp"

namespace vca {

/// Basic k-cover counts for k = 1..kmax with finite-difference analysis.
/// HF(0) = 1 by convention and is excluded from stabilization.
struct HilbertProfile {
    int kmax = 0;
    std::vector<long long> counts;   // counts[k-1] = number of basic k-covers
    bool stable = false;
    int stabilized_degree = -1;      // d: smallest degree with constant trailing d-th differences
    int dim = 0;                     // d + 1 when stable
    long long multiplicity = 0;      // the stabilized d-th difference
    int window = 3;
};

HilbertProfile hilbert_function(const BipartiteGraph& g, int kmax, int workers = 1);

struct WscResult {
    bool holds = false;
    // witness_edge[i] = partner j of a square-condition edge {i,j}, -1 for
    // isolated vertices; only filled when holds.
    std::vector<int> witness_edge;
    int violating_vertex = -1;  // when !holds
};

WscResult satisfies_wsc(const BipartiteGraph& g);

/// Same predicate computed from the basic 1-covers; must agree with
/// satisfies_wsc on every bipartite graph.
bool domain_criterion_via_covers(const BipartiteGraph& g);

/// Searches multisets of m basic 1-covers, m = 2..m_max, smallest m first and
/// lexicographically within m, for a sum that is not basic.
std::optional<std::vector<Cover>> zero_divisor_witness(const BipartiteGraph& g, int m_max);

bool is_unmixed(const BipartiteGraph& g);

bool tree_domain_test(const BipartiteGraph& t);
bool tree_unmixed_test(const BipartiteGraph& t);

/// Square form: every neighbor of i and every neighbor of j are adjacent.
/// Equivalent to the edge having sum exactly 1 in every basic 1-cover.
bool always_tight_edge(const BipartiteGraph& g, int i, int j);

/// Non-zero-divisor criterion for a basic k-cover: every slack edge {i,j}
/// admits always-tight edges {i,i'} and {j,j'}.
bool nonzerodivisor_test(const BipartiteGraph& g, const Cover& b);

/// Bounded necessary check of the "sum stays basic" condition: b + c basic
/// for every basic k'-cover c, k' <= kp_max.
bool sum_stays_basic_sampled(const BipartiteGraph& g, const Cover& b, int kp_max);

/// The two bipartition indicator 1-covers; both tight on every edge.
/// Requires a graph without isolated vertices.
std::pair<Cover, Cover> depth_witness(const BipartiteGraph& g);

struct DimDegreeBound {
    int s = 0;                 // min degree over the B side
    int dim_bound = 0;         // a - s + 2
    unsigned long long multiplicity_bound = 0;  // binom(a,s) * (a-s)!, valid only at equality
    // side-swapped variant, an extension not part of the stated theorem
    std::optional<int> swapped_dim_bound;
};

DimDegreeBound dim_bound_degree(const BipartiteGraph& g, bool include_swapped = false);

struct AraBound {
    int bound = 0;
    std::string provenance;  // "thm:7", "gdim", "rank(L)", "dim"
};

/// Applicable upper bounds for the arithmetical rank, smallest first.
std::vector<AraBound> ara_upper_bounds(const BipartiteGraph& g, int kmax);
std::vector<AraBound> ara_upper_bounds(const BipartiteGraph& g, const HilbertProfile& hp);

struct AlgebraReport {
    bool wsc = false;
    bool domain = false;
    bool unmixed = false;
    HilbertProfile hilbert;
    int gdim = 0;
    int dim_upper_a_plus_1 = 0;
    int dim_upper_degree = 0;  // a - s + 2
    std::optional<std::vector<Cover>> zero_divisor;
    std::pair<Cover, Cover> depth;  // on the stripped graph
    std::vector<AraBound> ara_bounds;
    int a = 0;
    int b = 0;
};

AlgebraReport analyze(const BipartiteGraph& g, int kmax, int m_max, int workers = 1);

}  // namespace vca

#endif
