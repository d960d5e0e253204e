#include "invdom/solvers.hpp"

#include <algorithm>
#include <array>

#include "invdom/errors.hpp"

namespace invdom {

std::string_view to_string(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::alpha: return "alpha";
    case BoundKind::three_halves: return "three_halves";
    case BoundKind::bipartite_b: return "bipartite_b";
    case BoundKind::main_theorem: return "main_theorem";
  }
  return "unknown";
}

namespace {

// Upper bound on alpha(G[cand]): number of cliques in a greedy clique cover.
int clique_cover_bound(const Graph& g, VertexSet cand) {
  int cliques = 0;
  while (!cand.empty()) {
    Vertex v = cand.lowest();
    cand.erase(v);
    VertexSet grow = g.neighbors(v) & cand;
    while (!grow.empty()) {
      Vertex c = grow.lowest();
      cand.erase(c);
      grow &= g.neighbors(c);
    }
    ++cliques;
  }
  return cliques;
}

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  Witnessed run() {
    search(g_.vertices(), VertexSet{});
    return {best_.size(), best_};
  }

 private:
  void search(VertexSet cand, VertexSet cur) {
    // Vertices of degree <= 1 in G[cand] always belong to some maximum set.
    for (bool reduced = true; reduced;) {
      reduced = false;
      for (Vertex v : cand) {
        if ((g_.neighbors(v) & cand).size() <= 1) {
          cur.insert(v);
          cand -= g_.closed_neighbors(v);
          reduced = true;
          break;
        }
      }
    }
    if (cand.empty()) {
      if (cur.size() > best_.size()) best_ = cur;
      return;
    }
    if (cur.size() + clique_cover_bound(g_, cand) <= best_.size()) return;

    Vertex pivot = cand.lowest();
    int pivot_deg = -1;
    for (Vertex v : cand) {
      int d = (g_.neighbors(v) & cand).size();
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    search(cand - g_.closed_neighbors(pivot), cur.with(pivot));
    search(cand.without(pivot), cur);
  }

  const Graph& g_;
  VertexSet best_;
};

// Set-cover style search for the smallest C inside `allowed` with
// target contained in N[C].
class CoverSearch {
 public:
  CoverSearch(const Graph& g, int best_size) : g_(g), best_size_(best_size) {}

  void search(VertexSet undominated, VertexSet allowed, VertexSet chosen) {
    if (undominated.empty()) {
      best_ = chosen;
      best_size_ = chosen.size();
      found_ = true;
      return;
    }
    const int k = chosen.size();
    if (k + 1 >= best_size_) return;

    VertexSet useful = closed_neighborhood(g_, undominated) & allowed;
    int max_cover = 0;
    for (Vertex w : useful) max_cover = std::max(max_cover, (g_.closed_neighbors(w) & undominated).size());
    if (max_cover == 0) return;
    if (k + (undominated.size() + max_cover - 1) / max_cover >= best_size_) return;

    // Branch on the undominated vertex with the fewest ways to be covered.
    Vertex pick = -1;
    int fewest = 65;
    for (Vertex u : undominated) {
      int c = (g_.closed_neighbors(u) & allowed).size();
      if (c < fewest) {
        fewest = c;
        pick = u;
      }
    }
    if (fewest == 0) return;

    std::array<std::pair<int, Vertex>, Graph::kMaxVertices> order{};
    int m = 0;
    for (Vertex w : g_.closed_neighbors(pick) & allowed)
      order[m++] = {-(g_.closed_neighbors(w) & undominated).size(), w};
    std::sort(order.begin(), order.begin() + m);
    for (int i = 0; i < m; ++i) {
      Vertex w = order[i].second;
      search(undominated - g_.closed_neighbors(w), allowed, chosen.with(w));
      // Later siblings need not revisit sets containing w.
      allowed.erase(w);
    }
  }

  bool found() const { return found_; }
  VertexSet best() const { return best_; }

 private:
  const Graph& g_;
  int best_size_;
  VertexSet best_;
  bool found_ = false;
};

VertexSet greedy_cover(const Graph& g, VertexSet target, VertexSet allowed) {
  VertexSet chosen;
  while (!target.empty()) {
    Vertex pick = -1;
    int most = 0;
    for (Vertex w : allowed - chosen) {
      int c = (g.closed_neighbors(w) & target).size();
      if (c > most) {
        most = c;
        pick = w;
      }
    }
    chosen.insert(pick);
    target -= g.closed_neighbors(pick);
  }
  return chosen;
}

class CoverEnumerator {
 public:
  CoverEnumerator(const Graph& g, VertexSet target, VertexSet allowed) : g_(g), allowed_(allowed), target_(target) {}

  std::vector<VertexSet> run(int k) {
    out_.clear();
    if (k >= 0) search(g_.n() - 1, VertexSet{}, k, target_);
    return std::move(out_);
  }

 private:
  // Decides vertices from high to low, "exclude" first, so results come out
  // in increasing bitmask order.
  void search(Vertex i, VertexSet chosen, int remaining, VertexSet undominated) {
    if (remaining == 0) {
      if (undominated.empty()) out_.push_back(chosen);
      return;
    }
    if (i < 0) return;
    VertexSet open = allowed_ & VertexSet::range(i + 1);
    if (open.size() < remaining) return;
    int max_cover = 0;
    for (Vertex w : open) max_cover = std::max(max_cover, (g_.closed_neighbors(w) & undominated).size());
    if (max_cover * remaining < undominated.size()) return;
    for (Vertex u : undominated)
      if (!g_.closed_neighbors(u).intersects(open)) return;

    search(i - 1, chosen, remaining, undominated);
    if (allowed_.contains(i)) search(i - 1, chosen.with(i), remaining - 1, undominated - g_.closed_neighbors(i));
  }

  const Graph& g_;
  VertexSet allowed_;
  VertexSet target_;
  std::vector<VertexSet> out_;
};

class BipartiteSearch {
 public:
  explicit BipartiteSearch(const Graph& g) : g_(g) {}

  Witnessed run() {
    search(0, VertexSet{}, VertexSet{});
    return {best_.size(), best_};
  }

 private:
  // Each vertex joins colour class A, class B, or is left out.
  void search(Vertex i, VertexSet a, VertexSet b) {
    const int have = a.size() + b.size();
    if (have > best_.size()) best_ = a | b;
    if (i == g_.n()) return;
    int placeable = 0;
    for (Vertex v = i; v < g_.n(); ++v)
      if (!g_.neighbors(v).intersects(a) || !g_.neighbors(v).intersects(b)) ++placeable;
    if (have + placeable <= best_.size()) return;

    if (!g_.neighbors(i).intersects(a)) search(i + 1, a.with(i), b);
    // Colour classes are interchangeable; the first chosen vertex goes to A.
    if (!(a | b).empty() && !g_.neighbors(i).intersects(b)) search(i + 1, a, b.with(i));
    search(i + 1, a, b);
  }

  const Graph& g_;
  VertexSet best_;
};

}  // namespace

Witnessed alpha(const Graph& g) { return IndependentSetSearch(g).run(); }

std::optional<VertexSet> min_cover(const Graph& g, VertexSet target, VertexSet allowed, int limit) {
  if (!target.subset_of(closed_neighborhood(g, allowed))) return std::nullopt;
  if (target.empty()) {
    if (limit == 0) return std::nullopt;
    return VertexSet{};
  }
  VertexSet greedy = greedy_cover(g, target, allowed);
  if (limit < 0 || greedy.size() < limit) {
    CoverSearch search(g, greedy.size());
    search.search(target, allowed, VertexSet{});
    return search.found() ? search.best() : greedy;
  }
  CoverSearch search(g, limit);
  search.search(target, allowed, VertexSet{});
  if (!search.found()) return std::nullopt;
  return search.best();
}

Witnessed gamma(const Graph& g) {
  VertexSet d = *min_cover(g, g.vertices(), g.vertices());
  return {d.size(), d};
}

std::vector<VertexSet> enumerate_dominating_sets_of_size(const Graph& g, int k, VertexSet allowed) {
  return CoverEnumerator(g, g.vertices(), allowed).run(k);
}

std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g) {
  return enumerate_dominating_sets_of_size(g, gamma(g).value, g.vertices());
}

std::optional<Witnessed> min_dominating_within(const Graph& g, VertexSet allowed) {
  auto c = min_cover(g, g.vertices(), allowed);
  if (!c) return std::nullopt;
  return Witnessed{c->size(), *c};
}

namespace {

void require_isolate_free(const Graph& g) {
  if (g.n() == 0 || has_isolated_vertex(g)) throw HasIsolates();
}

}  // namespace

std::pair<int, InverseCertificate> inverse_gamma(const Graph& g) {
  require_isolate_free(g);
  const auto ds = enumerate_min_dominating_sets(g);
  const int gam = ds.front().size();
  InverseCertificate cert;
  cert.bound_kind = BoundKind::exact;
  cert.route = "exhaustive";
  int best = g.n() + 1;
  for (VertexSet d : ds) {
    auto t = min_cover(g, g.vertices(), g.vertices() - d, best);
    if (!t) continue;
    best = t->size();
    cert.d_set = d;
    cert.t_set = *t;
    if (best == gam) break;  // no dominating set is smaller than gamma
  }
  if (best > g.n()) throw InternalContradiction("no minimum dominating set has a dominating complement");
  cert.bound_value = best;
  return {best, cert};
}

int strong_inverse_gamma(const Graph& g) {
  require_isolate_free(g);
  int worst = 0;
  for (VertexSet d : enumerate_min_dominating_sets(g)) {
    auto t = min_cover(g, g.vertices(), g.vertices() - d);
    if (!t) throw InternalContradiction("complement of minimum dominating set " + d.to_string() + " does not dominate");
    worst = std::max(worst, t->size());
  }
  return worst;
}

Witnessed max_induced_bipartite(const Graph& g) { return BipartiteSearch(g).run(); }

DominationCertificate describe_dominating_set(const Graph& g, VertexSet d_set) {
  DominationCertificate c;
  c.d_set = d_set;
  c.size = d_set.size();
  c.alpha_of_d = alpha(g.induced(d_set)).value;
  c.induced_edges = induced_edge_count(g, d_set);
  c.isolate_count = induced_isolates(g, d_set).size();
  return c;
}

DominationCertificate optimal_dominating_set(const Graph& g) {
  std::optional<DominationCertificate> best;
  for (VertexSet d : enumerate_min_dominating_sets(g)) {
    DominationCertificate c = describe_dominating_set(g, d);
    // Sets arrive in increasing bitmask order, so strict comparison keeps
    // the smallest mask among ties.
    if (!best || c.alpha_of_d > best->alpha_of_d ||
        (c.alpha_of_d == best->alpha_of_d && c.induced_edges < best->induced_edges))
      best = c;
  }
  return *best;
}

}  // namespace invdom
