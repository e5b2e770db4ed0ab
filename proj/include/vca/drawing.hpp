#ifndef VCA_DRAWING_HPP
#define VCA_DRAWING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vca/covers.hpp"
#include "vca/graph.hpp"

namespace vca {

/// Two-row layout of a connected bipartite graph: sigma[p] is the A-vertex at
/// position p (0-based positions), tau[p] the B-vertex. The top row is the
/// smaller side of the component.
struct StandardDrawing {
    std::vector<int> sigma;
    std::vector<int> tau;
};

enum class EdgeClass { Slash, Backslash, Vertical };

/// Classification of edge {u,v} (u on the top row) under a drawing.
EdgeClass classify_edge(const StandardDrawing& d, int u, int v);

/// The largest prefix 0..r-1 of vertical edges such that no top-row vertex at
/// position < r has a slash edge landing strictly before its own position.
int r_of(const BipartiteGraph& g, const StandardDrawing& d);

struct GdimResult {
    int gdim = 0;
    StandardDrawing witness;                    // for the first component with an edge
    std::vector<std::pair<int, int>> sequence;  // (u_t, v_t) matching behind the witness
    std::vector<int> component_gdims;           // one entry per component with an edge
    uint64_t nodes = 0;
    uint64_t prunes = 0;
};

/// Exact graphical dimension. Connected case: 1 + the longest sequence of
/// edges (u_1,v_1),...,(u_r,v_r) with distinct u's, distinct v's and u_t not
/// adjacent to any of v_1..v_{t-1}; found by depth-first branch and bound
/// with a maximum-matching upper bound on the residual graph. Components
/// combine as 1 - m + sum of component values; isolated vertices contribute
/// nothing.
GdimResult gdim(const BipartiteGraph& g);

/// Builds the basic k-cover determined by a weakly descending r-tuple omega
/// and an optimal drawing. The drawing must satisfy the eligibility
/// condition: every late top position has a neighbor among the first r bottom
/// positions and vice versa.
Cover descending_sequence_to_cover(const BipartiteGraph& g, const StandardDrawing& d,
                                   const std::vector<int>& omega, int k);

/// Positions i <= j (0-based, both < r) joined by a strictly increasing chain
/// of backslash edges {i_q, i_{q+1}'}.
bool saw_connected(const BipartiteGraph& g, const StandardDrawing& d, int i, int j);

struct TreeDimResult {
    int dim = 0;
    unsigned long long multiplicity_bound = 0;  // (a-r)^r * a * (a-1) * ... * (a-r+1)
};

TreeDimResult tree_dim(const BipartiteGraph& t);

/// Optimal drawing of a tree with only leaves placed after position r;
/// existence is guaranteed, NotFound-style failures throw Error.
StandardDrawing tree_optimal_leaves_right(const BipartiteGraph& t);

/// Plain-text two-row rendering with '|', '/', '\\' markers (small graphs).
std::string render_drawing(const BipartiteGraph& g, const StandardDrawing& d);

}  // namespace vca

#endif
