#ifndef VCA_LATTICE_HPP
#define VCA_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <tuple>
#include <vector>

#include "vca/covers.hpp"
#include "vca/graph.hpp"
#include "vca/poset.hpp"

namespace vca {

using BigInt = boost::multiprecision::cpp_int;

/// Distributive lattice of the basic 1-covers of an unmixed graph, ordered by
/// the A-side restriction. Chain length counts elements, so a two-element
/// chain has rank 2.
struct CoverLattice {
    std::vector<Cover> elements;            // lex sorted
    std::vector<std::vector<char>> leq;     // leq[i][j]: element i <= element j
    std::vector<std::pair<int, int>> hasse; // covering pairs (lower, upper)
    int rank = 0;
    BigInt maximal_chain_count = 0;
};

/// Requires is_unmixed(g) and no isolated vertices. Join/meet closure and
/// distributivity are verified during construction; a failure throws
/// ClosureViolation (it would contradict the theory, so it is escalated).
CoverLattice build_lattice(const BipartiteGraph& g);

std::pair<int, BigInt> rank_and_chains(const CoverLattice& l);

Cover lattice_join(const BipartiteGraph& g, const Cover& a, const Cover& b);
Cover lattice_meet(const BipartiteGraph& g, const Cover& a, const Cover& b);

/// One quadruple (a, b, a v b, a ^ b) of element indices per unordered
/// incomparable pair; each satisfies a + b = (a v b) + (a ^ b) coordinatewise.
std::vector<std::array<int, 4>> hibi_relations(const CoverLattice& l);

/// The lattice J(P) of down-closed subsets of P ordered by inclusion.
/// Elements are encoded as 0/1 indicator covers of length p.m.
CoverLattice poset_ideals(const FinitePoset& p);

/// True iff all maximal chains of P have equal length.
bool gorenstein_test(const FinitePoset& p);

/// Backtracking order-isomorphism search on the two lattices' orders.
bool order_isomorphic(const CoverLattice& l1, const CoverLattice& l2);

}  // namespace vca

#endif
