#ifndef VCA_COVERS_HPP
#define VCA_COVERS_HPP

#include <string>
#include <vector>

#include "vca/graph.hpp"

namespace vca {

/// A degree k plus one nonnegative value per vertex (0-based, length n).
struct Cover {
    int k = 0;
    std::vector<int> values;

    friend bool operator==(const Cover&, const Cover&) = default;
    friend auto operator<=>(const Cover& a, const Cover& b) {
        return a.values <=> b.values;
    }
};

Cover sum(const Cover& c1, const Cover& c2);

/// All basic k-covers, sorted lexicographically by value vector.
struct CoverSet {
    int k = 0;
    std::vector<Cover> covers;
    int count() const { return static_cast<int>(covers.size()); }
};

bool is_cover(const BipartiteGraph& g, const Cover& c);

/// Vertices where decrementing still leaves a k-cover. Requires is_cover.
/// An isolated vertex with a positive entry is always loppable.
std::vector<int> lop_positions(const BipartiteGraph& g, const Cover& c);

bool is_basic(const BipartiteGraph& g, const Cover& c);

/// Complete, duplicate-free set of basic k-covers (k >= 1). Depth-first over
/// A-side assignments with tightness pruning; each candidate is finished by
/// the forced B-side completion. Isolated vertices get 0.
CoverSet enumerate_basic(const BipartiteGraph& g, int k);

/// B-side completion of a partial assignment on A: b_j = k - min over
/// neighbors. Returns false when the result is not a basic k-cover.
/// The graph must have no isolated B-vertices.
bool b_side_completion(const BipartiteGraph& g, const std::vector<int>& a_values,
                       int k, Cover& out);

/// Splits a basic k-cover into k basic 1-covers (backtracking search).
/// Guaranteed to exist on bipartite graphs; DecompositionNotFound signals a bug.
std::vector<Cover> decompose_into_one_covers(const BipartiteGraph& g, const Cover& c);

// text form: "k a_1 ... a_n"
std::string write_cover(const Cover& c);
Cover parse_cover(const std::string& text);

}  // namespace vca

#endif
