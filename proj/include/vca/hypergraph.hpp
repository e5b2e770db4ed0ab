#ifndef VCA_HYPERGRAPH_HPP
#define VCA_HYPERGRAPH_HPP

#include <string>
#include <vector>

#include "vca/covers.hpp"
#include "vca/errors.hpp"

namespace vca {

/// Weighted hypergraph: faces form an antichain, every weight is >= 1.
struct WeightedHypergraph {
    int n = 0;
    std::vector<std::vector<int>> faces;  // each sorted ascending
    std::vector<int> weights;             // parallel to faces
    int max_face_size() const;

    static WeightedHypergraph create(int n, std::vector<std::vector<int>> faces,
                                     std::vector<int> weights);
};

bool is_k_cover(const WeightedHypergraph& h, const std::vector<int>& a, int k);

/// All basic k-covers: entries live in the box a_i <= k * max weight of a
/// face through i (anything larger is loppable); depth-first over the box
/// with face-sum pruning. Box volumes above the budget throw Budget.
CoverSet enumerate_basic_h(const WeightedHypergraph& h, int k,
                           unsigned long long box_budget = 100000000ULL);

struct DegreeBoundsReport {
    int kmax = 0;
    std::vector<long long> counts;
    bool stable = false;
    int period = 0;          // quasi-period accepted by the difference scan
    int degree = -1;         // estimated growth degree when stable
    int lower = 0;           // M - 1
    int upper = 0;           // (n-1) - floor((n-1)/M)
    bool within_bounds = false;
};

/// Estimates the growth degree of the basic-cover count with a
/// quasi-period-aware finite-difference scan and checks it against the
/// count-degree bounds.
DegreeBoundsReport degree_bounds_check(const WeightedHypergraph& h, int kmax,
                                       unsigned long long box_budget = 100000000ULL);

// text format: "n <count>" then lines "f <weight> <v1> <v2> ..." (1-based)
WeightedHypergraph parse_hypergraph(const std::string& text);
std::string write_hypergraph(const WeightedHypergraph& h);

}  // namespace vca

#endif
