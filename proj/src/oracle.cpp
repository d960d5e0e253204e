#include "invdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace invdom::oracle {
namespace {

std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(m);
  return out;
}

}  // namespace

bool dominates(const Graph& g, VertexSet s) {
  for (int v = 0; v < g.n(); ++v) {
    bool hit = s.contains(v);
    for (int u = 0; u < g.n() && !hit; ++u) hit = s.contains(u) && g.adjacent(u, v);
    if (!hit) return false;
  }
  return true;
}

bool independent(const Graph& g, VertexSet s) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (s.contains(u) && s.contains(v) && g.adjacent(u, v)) return false;
  return true;
}

bool bipartite(const Graph& g, VertexSet s) {
  // Try every 2-colouring of s; fine for the tiny sizes this is used at.
  std::vector<Vertex> vs = s.to_vector();
  const int k = static_cast<int>(vs.size());
  if (k == 0) return true;
  for (std::uint64_t colour = 0; colour < (std::uint64_t{1} << (k - 1)); ++colour) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if (g.adjacent(vs[i], vs[j]) && ((colour >> i) & 1) == ((colour >> j) & 1)) ok = false;
    if (ok) return true;
  }
  return false;
}

int alpha(const Graph& g) {
  int best = 0;
  for (VertexSet s : all_subsets(g.n()))
    if (independent(g, s)) best = std::max(best, s.size());
  return best;
}

int gamma(const Graph& g) {
  int best = g.n();
  for (VertexSet s : all_subsets(g.n()))
    if (dominates(g, s)) best = std::min(best, s.size());
  return best;
}

int max_induced_bipartite(const Graph& g) {
  int best = 0;
  for (VertexSet s : all_subsets(g.n()))
    if (s.size() > best && bipartite(g, s)) best = s.size();
  return best;
}

std::vector<VertexSet> min_dominating_sets(const Graph& g) {
  const int k = gamma(g);
  std::vector<VertexSet> out;
  for (VertexSet s : all_subsets(g.n()))
    if (s.size() == k && dominates(g, s)) out.push_back(s);
  return out;
}

namespace {

std::optional<int> best_disjoint(const Graph& g, bool maximise_over_d) {
  for (int v = 0; v < g.n(); ++v) {
    bool lonely = true;
    for (int u = 0; u < g.n(); ++u) lonely = lonely && !g.adjacent(u, v);
    if (lonely) return std::nullopt;
  }
  if (g.n() == 0) return std::nullopt;
  const auto subsets = all_subsets(g.n());
  const int k = gamma(g);
  std::optional<int> result;
  for (VertexSet d : subsets) {
    if (d.size() != k || !dominates(g, d)) continue;
    std::optional<int> here;
    for (VertexSet t : subsets)
      if (!t.intersects(d) && dominates(g, t) && (!here || t.size() < *here)) here = t.size();
    if (!here) continue;
    if (!result || (maximise_over_d ? *here > *result : *here < *result)) result = here;
  }
  return result;
}

}  // namespace

std::optional<int> inverse_gamma(const Graph& g) { return best_disjoint(g, false); }
std::optional<int> strong_inverse_gamma(const Graph& g) { return best_disjoint(g, true); }

namespace {

// Odometer over one choice per cell (or "skip" when partial is allowed).
int best_transversal(const Graph& g, const std::vector<VertexSet>& cells, bool partial) {
  const std::size_t k = cells.size();
  std::vector<std::vector<Vertex>> options(k);
  for (std::size_t i = 0; i < k; ++i) {
    options[i] = cells[i].to_vector();
    if (partial) options[i].push_back(-1);
    if (options[i].empty()) return -1;
  }
  std::vector<std::size_t> idx(k, 0);
  int best = -1;
  while (true) {
    VertexSet chosen;
    int hit = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Vertex v = options[i][idx[i]];
      if (v >= 0) {
        chosen.insert(v);
        ++hit;
      }
    }
    if (independent(g, chosen)) best = std::max(best, hit);
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == options[pos].size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return best;
}

}  // namespace

bool has_isr(const Graph& g, const std::vector<VertexSet>& cells) {
  return best_transversal(g, cells, false) == static_cast<int>(cells.size());
}

int max_partial_isr(const Graph& g, const std::vector<VertexSet>& cells) {
  return std::max(0, best_transversal(g, cells, true));
}

}  // namespace invdom::oracle
