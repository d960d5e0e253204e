#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "invdom/vertex_set.hpp"

namespace invdom {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, n <= 64, stored as one
/// adjacency word per vertex. Immutable once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  /// Edgeless graph on n vertices. Throws TooLarge for n > 64.
  explicit Graph(int n);
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  /// K_{1,leaves} with the center at vertex 0.
  static Graph star(int leaves);
  /// Build from adjacency rows; rows must already be symmetric and loop-free.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
  /// N[v] = N(v) + v
  VertexSet closed_neighbors(Vertex v) const { return VertexSet(rows_[v]).with(v); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  int degree(Vertex v) const { return neighbors(v).size(); }
  int edge_count() const;
  /// Edges (u, v) with u < v, ordered by v then u.
  std::vector<Edge> edges() const;

  /// Subgraph induced by s, relabelled to 0..|s|-1 in increasing order.
  Graph induced(VertexSet s) const;

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// s together with every vertex adjacent to some member of s.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);
/// Vertices adjacent to some member of s (may intersect s).
VertexSet open_neighborhood(const Graph& g, VertexSet s);

bool is_dominating(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);

/// {w outside d_set : N(w) & d_set == {v}}. Throws VertexNotInD.
VertexSet private_neighbors(const Graph& g, VertexSet d_set, Vertex v);

/// Members of s with no neighbour inside s.
VertexSet induced_isolates(const Graph& g, VertexSet s);
int induced_edge_count(const Graph& g, VertexSet s);
/// Odd-cycle test on G[s] via BFS 2-colouring.
bool induces_bipartite(const Graph& g, VertexSet s);

bool is_clique(const Graph& g);
bool has_isolated_vertex(const Graph& g);
bool is_connected(const Graph& g);
/// g's vertices keep their labels; h's are shifted by g.n().
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace invdom
