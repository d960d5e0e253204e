#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "invdom/graph.hpp"

namespace invdom {

/// Size plus a set realising it.
struct Witnessed {
  int value = 0;
  VertexSet witness;
};

/// A minimum dominating set together with the quantities that rank minimum
/// dominating sets against each other.
struct DominationCertificate {
  VertexSet d_set;
  int size = 0;
  int alpha_of_d = 0;     // independence number of G[D]
  int induced_edges = 0;  // |E(G[D])|
  int isolate_count = 0;  // isolated vertices of G[D]
};

enum class BoundKind { exact, alpha, three_halves, bipartite_b, main_theorem };
std::string_view to_string(BoundKind k);

/// Two disjoint dominating sets, D minimum, and the bound |T| is claimed to
/// respect. `route` names the construction branch that produced T.
struct InverseCertificate {
  VertexSet d_set;
  VertexSet t_set;
  BoundKind bound_kind = BoundKind::exact;
  int bound_value = 0;
  std::string_view route;
};

// Exact invariants. All of these are branch-and-bound searches over
// bitsets; the brute-force counterparts live in oracle.hpp.

Witnessed alpha(const Graph& g);
Witnessed gamma(const Graph& g);

/// Smallest C inside `allowed` with target contained in N[C]. Only sets of
/// size < `limit` are reported; pass a negative limit for no cap.
std::optional<VertexSet> min_cover(const Graph& g, VertexSet target, VertexSet allowed, int limit = -1);

/// Every dominating set of size gamma(g), in increasing bitmask order.
std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g);

/// Every set of exactly k vertices inside `allowed` that dominates g, in
/// increasing bitmask order.
std::vector<VertexSet> enumerate_dominating_sets_of_size(const Graph& g, int k, VertexSet allowed);

std::optional<Witnessed> min_dominating_within(const Graph& g, VertexSet allowed);

/// Smallest dominating set disjoint from some minimum dominating set.
/// Throws HasIsolates (also for n == 0).
std::pair<int, InverseCertificate> inverse_gamma(const Graph& g);
/// Like inverse_gamma but maximised over the choice of minimum D.
int strong_inverse_gamma(const Graph& g);

/// Largest vertex set inducing a bipartite subgraph.
Witnessed max_induced_bipartite(const Graph& g);

/// Minimum dominating set ranked by (largest alpha(G[D]), fewest induced
/// edges, smallest bitmask).
DominationCertificate optimal_dominating_set(const Graph& g);
DominationCertificate describe_dominating_set(const Graph& g, VertexSet d_set);

}  // namespace invdom
