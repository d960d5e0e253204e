#pragma once

// Brute-force reference computations over all 2^n subsets. Independent of
// the branch-and-bound solvers and meant for n <= 8 or so; tests and the
// selftest harness compare the two.

#include <optional>
#include <vector>

#include "invdom/graph.hpp"

namespace invdom::oracle {

bool dominates(const Graph& g, VertexSet s);
bool independent(const Graph& g, VertexSet s);
bool bipartite(const Graph& g, VertexSet s);

int alpha(const Graph& g);
int gamma(const Graph& g);
int max_induced_bipartite(const Graph& g);
std::vector<VertexSet> min_dominating_sets(const Graph& g);
/// Smallest dominating T with |D| = gamma, D dominating and disjoint from T,
/// by direct search over all such pairs. nullopt when g has isolates.
std::optional<int> inverse_gamma(const Graph& g);
std::optional<int> strong_inverse_gamma(const Graph& g);

/// Does some choice of one vertex per cell form an independent set?
bool has_isr(const Graph& g, const std::vector<VertexSet>& cells);
/// Largest number of cells an independent transversal of a subfamily hits.
int max_partial_isr(const Graph& g, const std::vector<VertexSet>& cells);

}  // namespace invdom::oracle
