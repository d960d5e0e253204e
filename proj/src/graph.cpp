#include "invdom/graph.hpp"

#include <stdexcept>
#include <string>

#include "invdom/errors.hpp"

namespace invdom {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) throw TooLarge("graph has " + std::to_string(n) + " vertices; the cap is 64");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.rows_[v] = rows[v] & VertexSet::range(n).bits();
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.rows_[v] = VertexSet::range(n).without(v).bits();
  return g;
}

Graph Graph::cycle(int n) {
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  return Graph(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es);
}

Graph Graph::star(int leaves) {
  std::vector<Edge> es;
  for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
  return Graph(leaves + 1, es);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < n_; ++v)
    for (Vertex u : neighbors(v) & VertexSet::range(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(VertexSet s) const {
  std::array<int, kMaxVertices> label{};
  int k = 0;
  for (Vertex v : s) label[v] = k++;
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (Vertex v : s)
    for (Vertex u : neighbors(v) & s) rows[label[v]] |= std::uint64_t{1} << label[u];
  return from_rows(k, rows);
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (rows_[v] != o.rows_[v]) return false;
  return true;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

bool is_dominating(const Graph& g, VertexSet s) { return closed_neighborhood(g, s) == g.vertices(); }

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

VertexSet private_neighbors(const Graph& g, VertexSet d_set, Vertex v) {
  if (!d_set.contains(v)) throw VertexNotInD("vertex " + std::to_string(v) + " is not in D");
  VertexSet out;
  for (Vertex w : g.neighbors(v) - d_set)
    if ((g.neighbors(w) & d_set) == VertexSet::single(v)) out.insert(w);
  return out;
}

VertexSet induced_isolates(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s)
    if (!g.neighbors(v).intersects(s)) out.insert(v);
  return out;
}

int induced_edge_count(const Graph& g, VertexSet s) {
  int twice = 0;
  for (Vertex v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

bool induces_bipartite(const Graph& g, VertexSet s) {
  VertexSet unseen = s;
  while (!unseen.empty()) {
    // BFS layer by layer; a layer touching itself means an odd cycle.
    VertexSet frontier = VertexSet::single(unseen.lowest());
    VertexSet side[2];
    int parity = 0;
    while (!frontier.empty()) {
      side[parity] |= frontier;
      unseen -= frontier;
      for (Vertex v : frontier)
        if (g.neighbors(v).intersects(side[parity])) return false;
      frontier = open_neighborhood(g, frontier) & unseen;
      parity ^= 1;
    }
  }
  return true;
}

bool is_clique(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != g.n() - 1) return false;
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    frontier = open_neighborhood(g, frontier) - seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.n() + h.n();
  if (n > Graph::kMaxVertices) throw TooLarge("disjoint union exceeds 64 vertices");
  std::array<std::uint64_t, Graph::kMaxVertices> rows{};
  for (int v = 0; v < g.n(); ++v) rows[v] = g.neighbors(v).bits();
  for (int v = 0; v < h.n(); ++v) rows[g.n() + v] = h.neighbors(v).bits() << g.n();
  return Graph::from_rows(n, rows);
}

}  // namespace invdom
