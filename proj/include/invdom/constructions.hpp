#pragma once

// Certificate-producing versions of the constructive arguments behind the
// inverse domination bounds: standard partitions, independent sets of
// representatives (ISRs) and the three constructions of an inverse
// dominating set T disjoint from a minimum dominating set D.
//
// Every step that a proof guarantees is checked at runtime; a failed check
// raises InternalContradiction rather than returning a weaker answer.

#include <optional>
#include <span>
#include <vector>

#include "invdom/graph.hpp"
#include "invdom/solvers.hpp"

namespace invdom {

/// Distinct vertex ids in a chosen order.
using OrderedVertexList = std::vector<Vertex>;

inline constexpr Vertex kNoRep = -1;

/// Cells V_i = N(reps[i]) & universe minus all earlier cells.
struct StandardPartition {
  OrderedVertexList reps;
  std::vector<VertexSet> cells;
  VertexSet universe;
};

/// Independent set picking at most one vertex per cell.
struct PartialIsr {
  VertexSet members;
  std::vector<Vertex> rep_of_cell;  // kNoRep for cells not represented

  int size() const { return members.size(); }
  /// Index of the cell `v` represents, or -1.
  int cell_of(Vertex v) const;
  /// i(R): the represented cell indices.
  std::vector<int> indices() const;
};

struct IsrPair {
  StandardPartition partition;
  PartialIsr r1;
  PartialIsr r2;
};

struct HaxellResult {
  bool ok = true;
  std::vector<int> violating;  // 0-based cell indices, empty when ok
};

struct TrichotomyOutcome {
  std::optional<VertexSet> found_s;
  int a = 0;  // isolated vertices of G[D]
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
};

struct PrivateNeighborReport {
  bool ok = true;
  std::vector<Vertex> violators;  // non-isolated D vertices with < 2 private neighbours
};

struct SuperIsrs {
  OrderedVertexList ordering;
  StandardPartition partition;  // of V - D, five cells
  PartialIsr r1;                // full ISR of cells 0..2
  PartialIsr r2;                // full ISR of cells 3..4
};

/// Throws NotDominated if some universe vertex has no neighbour among reps,
/// PreconditionViolated if reps and universe overlap or reps repeat.
StandardPartition standard_partition(const Graph& g, std::span<const Vertex> reps, VertexSet universe);

/// Checks gamma(G[V_S]) >= 2|S| - 1 for every nonempty S; on failure
/// reports the first violating S in (size, bitmask) order.
HaxellResult haxell_condition(const Graph& g, std::span<const VertexSet> cells);

/// Full ISR by backtracking over cells in index order, or nullopt.
std::optional<PartialIsr> find_isr(const Graph& g, std::span<const VertexSet> cells);
/// A partial ISR representing as many cells as possible.
PartialIsr max_partial_isr(const Graph& g, std::span<const VertexSet> cells);
/// Validates members/rep_of_cell consistency and independence.
bool is_partial_isr(const Graph& g, std::span<const VertexSet> cells, const PartialIsr& r);

/// Two partial ISRs of the standard partition of (V - D) - N(F) by the
/// ordering of D - F whose index sets split the cells exactly.
IsrPair two_partial_isrs(const Graph& g, VertexSet d_set, VertexSet f_set, std::span<const Vertex> ordering);
/// i(R1) and i(R2) partition the cell indices; members are disjoint.
bool is_isr_pair(const Graph& g, const IsrPair& pair);

/// Greedy by vertex id. Throws SeedNotIndependent.
VertexSet expand_to_maximal_independent(const Graph& g, VertexSet seed, VertexSet universe);
/// Greedy by vertex id: adds a vertex whenever the set stays bipartite.
VertexSet expand_to_maximal_bipartite(const Graph& g, VertexSet seed, VertexSet universe);

/// From an independent S with S - D dominating D - S, builds T disjoint
/// from D with |T| <= alpha(g).
InverseCertificate inddom_construct(const Graph& g, VertexSet d_set, VertexSet s);
/// T disjoint from D with |T| <= alpha(g) + floor((gamma(g) - 1) / 2).
InverseCertificate theorem_main_construct(const Graph& g, VertexSet d_set);
/// T disjoint from D with |T| <= b(g).
InverseCertificate bipartite_inverse_construct(const Graph& g, VertexSet d_set);

/// Independent S with (S - D) dominating (D - S), or nullopt.
std::optional<VertexSet> find_special_independent(const Graph& g, VertexSet d_set);
/// Throws LemmaViolated if neither outcome holds.
TrichotomyOutcome biglemma_trichotomy(const Graph& g, const DominationCertificate& cert);
PrivateNeighborReport lemma41_check(const Graph& g, const DominationCertificate& cert);

/// Requires an optimal D with |D| = 5, alpha(G[D]) <= 2 and no isolated
/// vertex in G[D].
SuperIsrs superisrs(const Graph& g, const DominationCertificate& cert);
/// Certificate with |T| <= alpha(g) for isolate-free g with gamma(g) = 5.
InverseCertificate gamma5_construct(const Graph& g);
/// The part of gamma5_construct that runs once superisrs applies. Exposed
/// so it can be exercised on graphs that would exit the cascade earlier.
InverseCertificate gamma5_superisr_route(const Graph& g, const DominationCertificate& cert);

/// Disjoint union of g with t copies of K2. Throws TooLarge past 64 vertices.
Graph pad_with_k2(const Graph& g, int t);

}  // namespace invdom
