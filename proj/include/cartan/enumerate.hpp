// Exhaustive enumeration of connected multiplicity-labelled diagrams up to
// isomorphism: all trees, and (optionally) all diagrams with exactly one
// cycle.  Output order is canonical and independent of how callers
// parallelise downstream classification.
#pragma once

#include "cartan/diagram.hpp"

#include <vector>

namespace cartan {

inline constexpr int kMaxTreeRank = 9;      // configured enumeration bound
inline constexpr int kMaxCycleRank = 8;     // one-cycle diagrams are costlier

// All multiplicity-labelled trees with exactly `rank` vertices, up to
// isomorphism, multiplicities 1..3, in canonical order.  Throws
// std::out_of_range beyond the bound.
std::vector<CoxeterDiagram> enumerate_trees(int rank);

// All connected diagrams with exactly `rank` vertices and `rank` lines
// (exactly one cycle), up to isomorphism.
std::vector<CoxeterDiagram> enumerate_unicyclic(int rank);

// Cumulative stream for ranks 1..max_rank (trees, then one-cycle diagrams
// of the same rank when include_cycles is set).
std::vector<CoxeterDiagram> enumerate_connected(int max_rank, bool include_cycles);

// Number of distinct unlabelled tree shapes of the given rank (exposed for
// tests).
int tree_shape_count(int rank);

}  // namespace cartan
