#include "invdom/corpus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "invdom/canonical.hpp"
#include "invdom/constructions.hpp"
#include "invdom/graph6.hpp"
#include "invdom/solvers.hpp"

namespace invdom {

int uniform_int(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

namespace {

// Every isomorphism class on `order` vertices, from all classes on order-1.
std::vector<Graph> extend_level(const std::vector<Graph>& level, int order) {
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> next;
  for (const Graph& parent : level) {
    std::vector<std::uint64_t> rows(order, 0);
    for (int v = 0; v + 1 < order; ++v) rows[v] = parent.neighbors(v).bits();
    for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (order - 1)); ++nb) {
      std::vector<std::uint64_t> child = rows;
      child[order - 1] = nb;
      for (int v = 0; v + 1 < order; ++v)
        if ((nb >> v) & 1U) child[v] |= std::uint64_t{1} << (order - 1);
      Graph c = canonical_form(Graph::from_rows(order, child));
      std::string key = write_graph6(c);
      if (seen.insert(key).second) next.emplace_back(std::move(key), c);
    }
  }
  std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(next.size());
  for (auto& [key, g] : next) out.push_back(g);
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> level{Graph(0)};
  for (int order = 1; order <= n; ++order) level = extend_level(level, order);
  return level;
}

std::vector<Graph> all_graphs_up_to(int max_n, bool connected_only) {
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(0)};
  for (int order = 1; order <= max_n; ++order) {
    level = extend_level(level, order);
    for (const Graph& g : level)
      if (!connected_only || is_connected(g)) out.push_back(g);
  }
  return out;
}

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng, p)) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph shuffle_labels(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), es);
}

Graph corona(const Graph& g) {
  std::vector<Edge> es = g.edges();
  for (int v = 0; v < g.n(); ++v) es.emplace_back(v, g.n() + v);
  return Graph(2 * g.n(), es);
}

Graph clique_chain(int k, int size) {
  std::vector<Edge> es;
  for (int c = 0; c < k; ++c) {
    const int base = c * size;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) es.emplace_back(base + i, base + j);
    if (c + 1 < k) es.emplace_back(base + size - 1, base + size);
  }
  return Graph(k * size, es);
}

Graph clique_cycle(int k, int size) {
  std::vector<Edge> es;
  for (int c = 0; c < k; ++c) {
    const int base = c * size;
    const int next = ((c + 1) % k) * size;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) es.emplace_back(base + i, base + j);
      if (k > 2 || c == 0)
        for (int j = 0; j < size; ++j) es.emplace_back(base + i, next + j);
    }
  }
  return Graph(k * size, es);
}

Graph mixed_family_graph(int n, double p, Rng& rng) {
  const int pick = uniform_int(rng, 0, 7);
  if (n >= 2 && pick == 0) {
    switch (uniform_int(rng, 0, 2)) {
      case 0:
        return shuffle_labels(Graph::star(n - 1), rng);
      case 1: {
        Graph base = random_graph(n / 2, p, rng);
        Graph c = corona(base);
        return shuffle_labels(n % 2 ? disjoint_union(c, Graph(1)) : c, rng);
      }
      default: {
        const int size = std::max(1, n / 3);
        Graph c = clique_chain(n / size, size);
        return shuffle_labels(c.n() < n ? disjoint_union(c, Graph(n - c.n())) : c, rng);
      }
    }
  }
  return random_graph(n, p, rng);
}

Graph pendant_pairs(const Graph& g) {
  std::vector<Edge> es = g.edges();
  for (int v = 0; v < g.n(); ++v) {
    es.emplace_back(v, g.n() + 2 * v);
    es.emplace_back(v, g.n() + 2 * v + 1);
  }
  return Graph(3 * g.n(), es);
}

std::vector<Graph> gamma5_corpus(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> structured;
  for (const Graph& h : all_graphs(5)) {
    structured.push_back(corona(h));
    if (!has_isolated_vertex(h)) structured.push_back(pendant_pairs(h));
  }
  for (int base_n = 2; base_n <= 6; ++base_n) {
    for (const Graph& h : all_graphs(base_n)) {
      if (has_isolated_vertex(h)) continue;
      const int gam = gamma(h).value;
      if (gam < 5) structured.push_back(pad_with_k2(h, 5 - gam));
    }
  }
  structured.push_back(Graph::cycle(15));

  std::vector<Graph> out;
  std::set<std::string> seen;
  auto keep = [&](const Graph& g) {
    if (static_cast<int>(out.size()) >= count) return false;
    if (g.n() > 20 || g.n() == 0 || has_isolated_vertex(g)) return false;
    if (gamma(g).value != 5) return false;
    return seen.insert(write_graph6(g)).second ? (out.push_back(g), true) : false;
  };

  // Alternate structured and random members so both kinds appear at any count.
  std::size_t next_structured = 0;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < 200000; ++tries) {
    if (tries % 2 == 0 && next_structured < structured.size()) {
      keep(shuffle_labels(structured[next_structured++], rng));
      continue;
    }
    const int n = uniform_int(rng, 12, 20);
    const double p = 0.08 + 0.2 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    keep(random_graph(n, p, rng));
  }
  return out;
}

}  // namespace invdom
