#include "invdom/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "invdom/errors.hpp"

namespace invdom {
namespace {

void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalContradiction(what);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionViolated(what);
}

void require_disjoint_cells(std::span<const VertexSet> cells) {
  VertexSet seen;
  for (VertexSet c : cells) {
    require(!c.intersects(seen), "cells are not pairwise disjoint");
    seen |= c;
  }
}

void require_isolate_free(const Graph& g) {
  if (g.n() == 0 || has_isolated_vertex(g)) throw HasIsolates();
}

void require_minimum_dominating(const Graph& g, VertexSet d_set) {
  require(d_set.subset_of(g.vertices()), "D has vertices outside the graph");
  require(is_dominating(g, d_set), "D " + d_set.to_string() + " is not dominating");
  require(d_set.size() == gamma(g).value, "D " + d_set.to_string() + " is not a minimum dominating set");
}

// Lowest-id neighbour of v outside D. Exists for every v in a minimum
// dominating set of an isolate-free graph.
Vertex outside_neighbor(const Graph& g, VertexSet d_set, Vertex v) {
  VertexSet out = g.neighbors(v) - d_set;
  ensure(!out.empty(), "vertex " + std::to_string(v) + " of D has no neighbour outside D");
  return out.lowest();
}

PartialIsr empty_isr(std::size_t cells) { return {VertexSet{}, std::vector<Vertex>(cells, kNoRep)}; }

// Exact search over transversals of a subfamily, index order.
class IsrSearch {
 public:
  IsrSearch(const Graph& g, std::span<const VertexSet> cells) : g_(g), cells_(cells) {}

  std::optional<PartialIsr> full() {
    std::vector<Vertex> reps(cells_.size(), kNoRep);
    if (!full_from(0, VertexSet{}, reps)) return std::nullopt;
    return result_;
  }

  PartialIsr maximum() {
    result_ = empty_isr(cells_.size());
    std::vector<Vertex> reps(cells_.size(), kNoRep);
    best_ = -1;
    max_from(0, VertexSet{}, reps);
    return result_;
  }

 private:
  bool full_from(std::size_t i, VertexSet chosen, std::vector<Vertex>& reps) {
    if (i == cells_.size()) {
      result_ = {chosen, reps};
      return true;
    }
    const VertexSet blocked = closed_neighborhood(g_, chosen);
    for (std::size_t j = i + 1; j < cells_.size(); ++j)
      if ((cells_[j] - blocked).empty()) return false;
    for (Vertex v : cells_[i] - blocked) {
      reps[i] = v;
      if (full_from(i + 1, chosen.with(v), reps)) return true;
    }
    reps[i] = kNoRep;
    return false;
  }

  void max_from(std::size_t i, VertexSet chosen, std::vector<Vertex>& reps) {
    if (chosen.size() > best_) {
      best_ = chosen.size();
      result_ = {chosen, reps};
    }
    if (i == cells_.size()) return;
    const VertexSet blocked = closed_neighborhood(g_, chosen);
    int reachable = 0;
    for (std::size_t j = i; j < cells_.size(); ++j)
      if (!(cells_[j] - blocked).empty()) ++reachable;
    if (chosen.size() + reachable <= best_) return;
    for (Vertex v : cells_[i] - blocked) {
      reps[i] = v;
      max_from(i + 1, chosen.with(v), reps);
    }
    reps[i] = kNoRep;
    max_from(i + 1, chosen, reps);
  }

  const Graph& g_;
  std::span<const VertexSet> cells_;
  PartialIsr result_;
  int best_ = -1;
};

VertexSet reps_to_set(std::span<const Vertex> reps, int n, const char* what) {
  VertexSet out;
  for (Vertex v : reps) {
    require(v >= 0 && v < n, std::string(what) + ": vertex id out of range");
    require(!out.contains(v), std::string(what) + ": repeated vertex " + std::to_string(v));
    out.insert(v);
  }
  return out;
}

void check_certificate(const Graph& g, const InverseCertificate& c) {
  ensure(!c.d_set.intersects(c.t_set), "construction produced T intersecting D");
  ensure(is_dominating(g, c.t_set), "construction produced a non-dominating T " + c.t_set.to_string());
  ensure(c.t_set.size() <= c.bound_value, "construction produced |T| = " + std::to_string(c.t_set.size()) +
                                              " above the bound " + std::to_string(c.bound_value));
}

}  // namespace

int PartialIsr::cell_of(Vertex v) const {
  for (std::size_t i = 0; i < rep_of_cell.size(); ++i)
    if (rep_of_cell[i] == v) return static_cast<int>(i);
  return -1;
}

std::vector<int> PartialIsr::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rep_of_cell.size(); ++i)
    if (rep_of_cell[i] != kNoRep) out.push_back(static_cast<int>(i));
  return out;
}

StandardPartition standard_partition(const Graph& g, std::span<const Vertex> reps, VertexSet universe) {
  const VertexSet x = reps_to_set(reps, g.n(), "standard partition");
  require(!x.intersects(universe), "representatives and universe overlap");
  StandardPartition p{OrderedVertexList(reps.begin(), reps.end()), {}, universe};
  VertexSet taken;
  for (Vertex d : reps) {
    VertexSet cell = (g.neighbors(d) & universe) - taken;
    p.cells.push_back(cell);
    taken |= cell;
  }
  if (taken != universe)
    throw NotDominated("universe vertex " + std::to_string((universe - taken).lowest()) +
                       " has no neighbour among the representatives");
  return p;
}

HaxellResult haxell_condition(const Graph& g, std::span<const VertexSet> cells) {
  require_disjoint_cells(cells);
  const int k = static_cast<int>(cells.size());
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint64_t m : masks) {
    VertexSet area;
    for (int i = 0; i < k; ++i)
      if ((m >> i) & 1U) area |= cells[i];
    // gamma(G[A]): C inside A dominating A; N[C] & A is the induced closed neighbourhood.
    auto c = min_cover(g, area, area);
    const int dom = c ? c->size() : 0;
    if (dom < 2 * std::popcount(m) - 1) {
      HaxellResult r{false, {}};
      for (int i = 0; i < k; ++i)
        if ((m >> i) & 1U) r.violating.push_back(i);
      return r;
    }
  }
  return {};
}

std::optional<PartialIsr> find_isr(const Graph& g, std::span<const VertexSet> cells) {
  require_disjoint_cells(cells);
  return IsrSearch(g, cells).full();
}

PartialIsr max_partial_isr(const Graph& g, std::span<const VertexSet> cells) {
  require_disjoint_cells(cells);
  return IsrSearch(g, cells).maximum();
}

bool is_partial_isr(const Graph& g, std::span<const VertexSet> cells, const PartialIsr& r) {
  if (r.rep_of_cell.size() != cells.size()) return false;
  VertexSet from_cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Vertex v = r.rep_of_cell[i];
    if (v == kNoRep) continue;
    if (!cells[i].contains(v) || from_cells.contains(v)) return false;
    from_cells.insert(v);
  }
  return from_cells == r.members && is_independent(g, r.members);
}

IsrPair two_partial_isrs(const Graph& g, VertexSet d_set, VertexSet f_set, std::span<const Vertex> ordering) {
  require_minimum_dominating(g, d_set);
  require(f_set.subset_of(d_set) && is_independent(g, f_set), "F must be an independent subset of D");
  require((d_set - f_set).subset_of(open_neighborhood(g, f_set)), "F is not a maximal independent set of D");
  const VertexSet rest = reps_to_set(ordering, g.n(), "ordering of D - F");
  require(rest == d_set - f_set, "ordering does not enumerate D - F");

  const VertexSet universe = g.vertices() - d_set - open_neighborhood(g, f_set);
  StandardPartition p = standard_partition(g, ordering, universe);
  const std::size_t n = p.cells.size();

  // Direct search over index bipartitions (I1, I2): an ISR of the doubled
  // family is exactly an ISR of I1 in one copy and of I2 in the other.
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<VertexSet> sub1, sub2;
    std::vector<std::size_t> at1, at2;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1U) {
        sub1.push_back(p.cells[i]);
        at1.push_back(i);
      } else {
        sub2.push_back(p.cells[i]);
        at2.push_back(i);
      }
    }
    auto r1 = IsrSearch(g, sub1).full();
    if (!r1) continue;
    auto r2 = IsrSearch(g, sub2).full();
    if (!r2) continue;
    IsrPair out{p, empty_isr(n), empty_isr(n)};
    for (std::size_t j = 0; j < at1.size(); ++j) out.r1.rep_of_cell[at1[j]] = r1->rep_of_cell[j];
    for (std::size_t j = 0; j < at2.size(); ++j) out.r2.rep_of_cell[at2[j]] = r2->rep_of_cell[j];
    out.r1.members = r1->members;
    out.r2.members = r2->members;
    return out;
  }
  throw InternalContradiction("no pair of partial ISRs splits the " + std::to_string(n) + " cells");
}

bool is_isr_pair(const Graph& g, const IsrPair& pair) {
  const auto& cells = pair.partition.cells;
  if (!is_partial_isr(g, cells, pair.r1) || !is_partial_isr(g, cells, pair.r2)) return false;
  if (pair.r1.members.intersects(pair.r2.members)) return false;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if ((pair.r1.rep_of_cell[i] == kNoRep) == (pair.r2.rep_of_cell[i] == kNoRep)) return false;
  return true;
}

VertexSet expand_to_maximal_independent(const Graph& g, VertexSet seed, VertexSet universe) {
  if (!is_independent(g, seed)) throw SeedNotIndependent("seed " + seed.to_string() + " is not independent");
  require(seed.subset_of(universe), "seed is not inside the universe");
  VertexSet out = seed;
  for (Vertex v : universe - closed_neighborhood(g, seed))
    if (!g.neighbors(v).intersects(out)) out.insert(v);
  return out;
}

VertexSet expand_to_maximal_bipartite(const Graph& g, VertexSet seed, VertexSet universe) {
  require(induces_bipartite(g, seed), "seed does not induce a bipartite graph");
  VertexSet out = seed;
  for (Vertex v : universe - seed)
    if (induces_bipartite(g, out.with(v))) out.insert(v);
  return out;
}

InverseCertificate inddom_construct(const Graph& g, VertexSet d_set, VertexSet s) {
  require_isolate_free(g);
  require_minimum_dominating(g, d_set);
  require(is_independent(g, s), "S is not independent");
  require((d_set - s).subset_of(open_neighborhood(g, s - d_set)), "S - D does not dominate D - S");

  const VertexSet outside = g.vertices() - d_set;
  const VertexSet s1 = expand_to_maximal_independent(g, s - d_set, outside);
  const VertexSet s2 = d_set - closed_neighborhood(g, s1);
  ensure(s2.subset_of(s & d_set), "undominated part of D escapes S");
  ensure(is_independent(g, s1 | s2), "S1' + S2' is not independent");

  VertexSet t = s1;
  for (Vertex v : s2) t.insert(outside_neighbor(g, d_set, v));

  InverseCertificate c{d_set, t, BoundKind::alpha, alpha(g).value, "inddom"};
  ensure(s1.size() + s2.size() <= c.bound_value, "independent set larger than alpha");
  check_certificate(g, c);
  return c;
}

InverseCertificate theorem_main_construct(const Graph& g, VertexSet d_set) {
  require_isolate_free(g);
  require_minimum_dominating(g, d_set);
  const int alpha_g = alpha(g).value;
  const VertexSet outside = g.vertices() - d_set;

  const VertexSet f = expand_to_maximal_independent(g, VertexSet{}, d_set);
  const OrderedVertexList order = (d_set - f).to_vector();
  const int n = static_cast<int>(order.size());
  // Universe (V - D) - N(F): the one for which the half-size partial ISR
  // guarantee is proved.
  const StandardPartition p = standard_partition(g, order, outside - open_neighborhood(g, f));

  const PartialIsr r = max_partial_isr(g, p.cells);
  ensure(2 * r.size() >= n, "largest partial ISR has fewer than n/2 cells");

  const VertexSet s = expand_to_maximal_independent(g, r.members, outside);
  const VertexSet f_left = f - open_neighborhood(g, s);
  ensure(is_independent(g, s | f_left), "S + F' is not independent");
  ensure(s.size() + f_left.size() <= alpha_g, "S + F' exceeds alpha");

  VertexSet s1 = s;
  for (Vertex v : f_left) s1.insert(outside_neighbor(g, d_set, v));
  const VertexSet d_left = (d_set - f) - open_neighborhood(g, s1);
  ensure(d_left.size() <= n - r.size(), "more of D - F left undominated than unrepresented cells");

  VertexSet t = s1;
  for (Vertex w : d_left) t.insert(outside_neighbor(g, d_set, w));

  const int gam = d_set.size();
  InverseCertificate c{d_set, t, BoundKind::main_theorem, alpha_g + (gam - 1) / 2, "main"};
  check_certificate(g, c);
  return c;
}

InverseCertificate bipartite_inverse_construct(const Graph& g, VertexSet d_set) {
  require_isolate_free(g);
  require_minimum_dominating(g, d_set);
  const VertexSet outside = g.vertices() - d_set;

  const VertexSet f = expand_to_maximal_independent(g, VertexSet{}, d_set);
  const OrderedVertexList order = (d_set - f).to_vector();
  const IsrPair pair = two_partial_isrs(g, d_set, f, order);
  ensure(is_isr_pair(g, pair), "ISR pair failed validation");

  const VertexSet seed = pair.r1.members | pair.r2.members;
  const VertexSet b = expand_to_maximal_bipartite(g, seed, outside);
  ensure((g.vertices() - f).subset_of(closed_neighborhood(g, b)), "maximal bipartite B misses a vertex outside F");
  const VertexSet f0 = f - open_neighborhood(g, b);
  ensure(induces_bipartite(g, b | f0), "B + F0 is not bipartite");

  VertexSet t = b;
  for (Vertex v : f0) t.insert(outside_neighbor(g, d_set, v));

  InverseCertificate c{d_set, t, BoundKind::bipartite_b, max_induced_bipartite(g).value, "bipartite"};
  ensure(b.size() + f0.size() <= c.bound_value, "B + F0 larger than b(G)");
  check_certificate(g, c);
  return c;
}

namespace {

// Independent S1 inside `allowed` with targets contained in N(S1).
std::optional<VertexSet> independent_cover(const Graph& g, VertexSet targets, VertexSet allowed, VertexSet chosen) {
  if (targets.empty()) return chosen;
  const Vertex t = targets.lowest();
  for (Vertex w : g.neighbors(t) & allowed) {
    auto r = independent_cover(g, targets - g.neighbors(w), allowed - g.closed_neighbors(w), chosen.with(w));
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> find_special_independent(const Graph& g, VertexSet d_set) {
  const std::vector<Vertex> dv = d_set.to_vector();
  const int k = static_cast<int>(dv.size());
  std::vector<VertexSet> inside;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    VertexSet s2;
    for (int i = 0; i < k; ++i)
      if ((m >> i) & 1U) s2.insert(dv[i]);
    if (is_independent(g, s2)) inside.push_back(s2);
  }
  // Larger S & D leaves fewer vertices of D to cover.
  std::stable_sort(inside.begin(), inside.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  const VertexSet outside = g.vertices() - d_set;
  for (VertexSet s2 : inside) {
    auto s1 = independent_cover(g, d_set - s2, outside - open_neighborhood(g, s2), VertexSet{});
    if (s1) return *s1 | s2;
  }
  return std::nullopt;
}

TrichotomyOutcome biglemma_trichotomy(const Graph& g, const DominationCertificate& cert) {
  require_isolate_free(g);
  require(is_dominating(g, cert.d_set), "certificate set is not dominating");
  TrichotomyOutcome out;
  const VertexSet d = cert.d_set;
  out.a = induced_isolates(g, d).size();
  out.found_s = find_special_independent(g, d);
  if (out.found_s) return out;

  const int size = d.size();
  const int alpha_d = alpha(g.induced(d)).value;
  out.cond1 = out.a + 1 <= alpha_d && alpha_d <= size - 3;
  out.cond2 = g.n() + out.a >= 3 * size;
  out.cond3 = size >= out.a + 5;
  if (!(out.cond1 && out.cond2 && out.cond3))
    throw LemmaViolated("no special independent set and conditions (" + std::to_string(out.cond1) + "," +
                        std::to_string(out.cond2) + "," + std::to_string(out.cond3) + ") fail for D " + d.to_string());
  return out;
}

PrivateNeighborReport lemma41_check(const Graph& g, const DominationCertificate& cert) {
  PrivateNeighborReport r;
  const VertexSet d = cert.d_set;
  for (Vertex v : d - induced_isolates(g, d)) {
    if (private_neighbors(g, d, v).size() < 2) {
      r.ok = false;
      r.violators.push_back(v);
    }
  }
  return r;
}

namespace {

void require_superisr_input(const Graph& g, const DominationCertificate& cert) {
  require_isolate_free(g);
  const VertexSet d = cert.d_set;
  require(d.size() == 5, "superisrs needs |D| = 5, got " + std::to_string(d.size()));
  require_minimum_dominating(g, d);
  const DominationCertificate fresh = describe_dominating_set(g, d);
  require(fresh.alpha_of_d <= 2, "superisrs needs alpha(G[D]) <= 2");
  require(fresh.isolate_count == 0, "superisrs needs G[D] without isolated vertices");
  const DominationCertificate best = optimal_dominating_set(g);
  require(fresh.alpha_of_d == best.alpha_of_d && fresh.induced_edges == best.induced_edges,
          "D is not an optimal dominating set");
}

std::optional<std::pair<Vertex, Vertex>> nonadjacent_pair(const Graph& g, VertexSet a, VertexSet b) {
  for (Vertex x : a) {
    VertexSet ok = b - g.neighbors(x);
    if (!ok.empty()) return std::pair{x, ok.lowest()};
  }
  return std::nullopt;
}

}  // namespace

SuperIsrs superisrs(const Graph& g, const DominationCertificate& cert) {
  require_superisr_input(g, cert);
  const VertexSet d = cert.d_set;
  const VertexSet outside = g.vertices() - d;
  const std::vector<Vertex> dv = d.to_vector();

  // d1, d2 nonadjacent whenever D is not a clique.
  std::vector<std::pair<Vertex, Vertex>> firsts;
  for (std::size_t i = 0; i < dv.size(); ++i)
    for (std::size_t j = i + 1; j < dv.size(); ++j)
      if (!g.adjacent(dv[i], dv[j])) firsts.emplace_back(dv[i], dv[j]);
  if (firsts.empty())
    for (std::size_t i = 0; i < dv.size(); ++i)
      for (std::size_t j = i + 1; j < dv.size(); ++j) firsts.emplace_back(dv[i], dv[j]);

  for (auto [d1, d2] : firsts) {
    const VertexSet v1 = g.neighbors(d1) & outside;
    const VertexSet v2 = (g.neighbors(d2) & outside) - v1;
    for (Vertex r1 : v1) {
      for (Vertex r2 : v2 - g.neighbors(r1)) {
        // Four vertices cannot dominate a graph with gamma = 5.
        const VertexSet missed = g.vertices() - closed_neighborhood(g, VertexSet{d1, d2, r1, r2});
        ensure(missed.subset_of(outside), "{d1, d2} fails to dominate D");
        for (Vertex r3 : missed) {
          for (Vertex d3 : g.neighbors(r3) & d) {
            const std::vector<Vertex> last = (d - VertexSet{d1, d2, d3}).to_vector();
            for (int swap = 0; swap < 2; ++swap) {
              OrderedVertexList order{d1, d2, d3, last[swap], last[1 - swap]};
              StandardPartition p = standard_partition(g, order, outside);
              if (!p.cells[2].contains(r3)) continue;
              auto tail = nonadjacent_pair(g, p.cells[3], p.cells[4]);
              if (!tail) continue;
              SuperIsrs out{order, p, empty_isr(5), empty_isr(5)};
              out.r1.rep_of_cell[0] = r1;
              out.r1.rep_of_cell[1] = r2;
              out.r1.rep_of_cell[2] = r3;
              out.r1.members = VertexSet{r1, r2, r3};
              out.r2.rep_of_cell[3] = tail->first;
              out.r2.rep_of_cell[4] = tail->second;
              out.r2.members = VertexSet{tail->first, tail->second};
              ensure(is_partial_isr(g, p.cells, out.r1) && is_partial_isr(g, p.cells, out.r2),
                     "superISR candidates failed validation");
              return out;
            }
          }
        }
      }
    }
  }
  throw InternalContradiction("no ordering of D admits ISRs for cells (1,2,3) and (4,5)");
}

InverseCertificate gamma5_superisr_route(const Graph& g, const DominationCertificate& cert) {
  const SuperIsrs base = superisrs(g, cert);
  const VertexSet d = cert.d_set;
  const auto& cells = base.partition.cells;
  const int alpha_g = alpha(g).value;

  // Among all (R1, R2) for this ordering, fewest edges between them.
  PartialIsr best_r1 = base.r1;
  PartialIsr best_r2 = base.r2;
  int best_edges = 65 * 65;
  std::vector<std::pair<Vertex, Vertex>> tails;
  for (Vertex a : cells[3])
    for (Vertex b : cells[4] - g.neighbors(a)) tails.emplace_back(a, b);
  for (Vertex a : cells[0])
    for (Vertex b : cells[1] - g.neighbors(a))
      for (Vertex c : cells[2] - g.neighbors(a) - g.neighbors(b)) {
        const VertexSet r1{a, b, c};
        for (auto [x, y] : tails) {
          const int e = (g.neighbors(x) & r1).size() + (g.neighbors(y) & r1).size();
          if (e < best_edges) {
            best_edges = e;
            best_r1 = {r1, {a, b, c, kNoRep, kNoRep}};
            best_r2 = {VertexSet{x, y}, {kNoRep, kNoRep, kNoRep, x, y}};
          }
        }
      }

  auto finish = [&](VertexSet t, std::string_view route) {
    InverseCertificate c{d, t, BoundKind::alpha, alpha_g, route};
    check_certificate(g, c);
    return c;
  };

  const PartialIsr big = max_partial_isr(g, cells);
  if (big.size() >= 4) {
    VertexSet s = big.members | (d - open_neighborhood(g, big.members));
    InverseCertificate c = inddom_construct(g, d, s);
    c.route = "superisr-shortcut";
    return c;
  }
  ensure(big.size() == 3, "largest partial ISR of the five cells is below 3");
  ensure((cells[3] | cells[4]).subset_of(closed_neighborhood(g, best_r1.members)), "R1 does not dominate V4 + V5");

  const VertexSet pair = best_r1.members | best_r2.members;
  const VertexSet undominated = g.vertices() - closed_neighborhood(g, pair);
  if (undominated.empty()) return finish(pair, "superisr-pair");

  ensure(undominated.subset_of(cells[0] | cells[1] | cells[2]), "undominated vertices outside V1 + V2 + V3");
  int k = -1;
  for (int j = 0; j < 3; ++j) {
    if (!cells[j].intersects(undominated)) continue;
    ensure(k < 0, "undominated vertices meet two of V1, V2, V3");
    k = j;
  }
  const VertexSet rest = pair.without(best_r1.rep_of_cell[k]);
  VertexSet others;
  for (int j = 0; j < 5; ++j)
    if (j != k) others |= cells[j];
  const VertexSet loose = others - closed_neighborhood(g, rest);
  if (loose.empty())
    throw InternalContradiction("R* + d_k would be a dominating set beating the optimal D");
  const Vertex w = loose.lowest();
  ensure(undominated.subset_of(g.neighbors(w)), "vertex missed by R* is not adjacent to all undominated vertices");
  ensure(alpha_g >= 6, "alpha(G) below 6 with a non-independent optimal D");
  return finish(pair.with(w), "superisr-plus-one");
}

InverseCertificate gamma5_construct(const Graph& g) {
  require_isolate_free(g);
  const int gam = gamma(g).value;
  require(gam == 5, "gamma5_construct needs gamma(G) = 5, got " + std::to_string(gam));
  const DominationCertificate cert = optimal_dominating_set(g);
  const VertexSet d = cert.d_set;

  const StandardPartition p = standard_partition(g, d.to_vector(), g.vertices() - d);
  const PartialIsr big = max_partial_isr(g, p.cells);
  if (big.size() >= 4) {
    VertexSet s = big.members | (d - open_neighborhood(g, big.members));
    InverseCertificate c = inddom_construct(g, d, s);
    c.route = "shortcut";
    return c;
  }

  if (auto s = find_special_independent(g, d)) {
    InverseCertificate c = inddom_construct(g, d, *s);
    c.route = "special-independent";
    return c;
  }

  TrichotomyOutcome tri;
  try {
    tri = biglemma_trichotomy(g, cert);
  } catch (const LemmaViolated& e) {
    throw InternalContradiction(e.what());
  }
  ensure(cert.alpha_of_d <= 2, "alpha(G[D]) above 2 after the trichotomy");
  ensure(tri.a == 0, "G[D] has isolated vertices after the trichotomy");
  return gamma5_superisr_route(g, cert);
}

Graph pad_with_k2(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("negative padding count");
  if (g.n() + 2 * t > Graph::kMaxVertices) throw TooLarge("padding would exceed 64 vertices");
  Graph out = g;
  for (int i = 0; i < t; ++i) out = disjoint_union(out, Graph::complete(2));
  return out;
}

}  // namespace invdom
