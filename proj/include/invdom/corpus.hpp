#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "invdom/graph.hpp"

namespace invdom {

/// std::mt19937_64 output is fixed by the standard, so seeded corpora are
/// reproducible across platforms. Distributions are hand-rolled for the
/// same reason.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);
/// True with probability p.
bool coin(Rng& rng, double p);

/// One representative (in canonical form) of every isomorphism class on n
/// vertices, grown vertex by vertex with canonical-form deduplication.
/// Sorted by graph6 string.
std::vector<Graph> all_graphs(int n);
/// all_graphs(0..max_n) concatenated.
std::vector<Graph> all_graphs_up_to(int max_n, bool connected_only = false);

Graph random_graph(int n, double p, Rng& rng);
/// Randomly relabel the vertices.
Graph shuffle_labels(const Graph& g, Rng& rng);

/// g with a pendant vertex attached to each vertex.
Graph corona(const Graph& g);
/// k cliques of the given size, consecutive cliques joined by one edge.
Graph clique_chain(int k, int size);
/// Cycle of k cliques; each clique fully joined to the next.
Graph clique_cycle(int k, int size);

/// Two pendant vertices on every vertex of g; gamma equals g.n().
Graph pendant_pairs(const Graph& g);

/// Mix used by `search` and the sampled sweeps: mostly G(n, p), with
/// stars, coronas and clique chains interleaved (about one in eight).
Graph mixed_family_graph(int n, double p, Rng& rng);

/// Isolate-free graphs with gamma = 5 from padded, structured and random
/// families; at most 20 vertices.
std::vector<Graph> gamma5_corpus(int count, std::uint64_t seed);

}  // namespace invdom
