#ifndef VCA_POSET_HPP
#define VCA_POSET_HPP

#include <vector>

#include "vca/errors.hpp"

namespace vca {

/// Finite poset on elements 0..m-1, stored as the full relation matrix.
/// leq[i][j] is true iff element i precedes-or-equals element j.
struct FinitePoset {
    int m = 0;
    std::vector<std::vector<char>> leq;

    FinitePoset() = default;

    /// Builds from a list of covering-or-weaker relations (i <= j) and takes
    /// the reflexive-transitive closure. Throws InvalidParameters if the
    /// closure is not antisymmetric.
    static FinitePoset from_relations(int m, const std::vector<std::pair<int, int>>& rels);

    bool less_eq(int i, int j) const { return leq[i][j] != 0; }

    /// True iff every maximal chain has the same number of elements.
    bool is_pure() const;

    /// Element count of the longest chain.
    int height() const;
};

}  // namespace vca

#endif
