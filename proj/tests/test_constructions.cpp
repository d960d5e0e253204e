#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "invdom/constructions.hpp"
#include "invdom/corpus.hpp"
#include "invdom/errors.hpp"
#include "invdom/oracle.hpp"
#include "invdom/report.hpp"
#include "invdom/solvers.hpp"

using namespace invdom;
using namespace invdom::fixtures;

namespace {

std::vector<Vertex> order(std::initializer_list<Vertex> vs) { return vs; }

// Recomputes cells straight from the defining formula.
std::vector<VertexSet> cells_by_definition(const Graph& g, const OrderedVertexList& reps, VertexSet universe) {
  std::vector<VertexSet> cells;
  VertexSet earlier;
  for (Vertex v : reps) {
    VertexSet cell;
    for (Vertex y : universe)
      if (g.adjacent(v, y) && !earlier.contains(y)) cell.insert(y);
    cells.push_back(cell);
    earlier |= cell;
  }
  return cells;
}

void check_certificate(const Graph& g, const InverseCertificate& c) {
  const auto problem = verify_certificate(g, c);
  CHECK_MESSAGE(!problem, (problem ? *problem : std::string()));
}

// Maximal independent subsets of d, in bitmask order.
std::vector<VertexSet> maximal_independent_within(const Graph& g, VertexSet d) {
  std::vector<VertexSet> out;
  const std::vector<Vertex> dv = d.to_vector();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << dv.size()); ++m) {
    VertexSet f;
    for (std::size_t i = 0; i < dv.size(); ++i)
      if ((m >> i) & 1U) f.insert(dv[i]);
    if (!is_independent(g, f)) continue;
    bool maximal = true;
    for (Vertex v : d - f)
      if (!g.neighbors(v).intersects(f)) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("standard partition") {
  const StandardPartition a = standard_partition(p4(), order({1, 2}), VertexSet{0, 3});
  CHECK(a.cells == std::vector<VertexSet>{{0}, {3}});
  const StandardPartition b = standard_partition(p4(), order({2, 1}), VertexSet{0, 3});
  CHECK(b.cells == std::vector<VertexSet>{{3}, {0}});
  const Graph pet = petersen();
  const StandardPartition single = standard_partition(pet, order({4}), pet.neighbors(4));
  CHECK(single.cells == std::vector<VertexSet>{pet.neighbors(4)});
  CHECK_THROWS_AS(standard_partition(p4(), order({0}), VertexSet{3}), NotDominated);
  CHECK_THROWS_AS(standard_partition(p4(), order({1}), VertexSet{1, 2}), PreconditionViolated);
}

TEST_CASE("standard partition matches its definition") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(uniform_int(rng, 2, 12), 0.35, rng);
    if (has_isolated_vertex(g)) continue;
    const VertexSet d = gamma(g).witness;
    std::vector<Vertex> reps = d.to_vector();
    std::shuffle(reps.begin(), reps.end(), rng);
    const VertexSet universe = g.vertices() - d;
    const StandardPartition p = standard_partition(g, reps, universe);
    CHECK(p.cells == cells_by_definition(g, reps, universe));
    VertexSet all;
    for (VertexSet c : p.cells) all |= c;
    CHECK(all == universe);
  }
}

TEST_CASE("haxell condition") {
  const std::vector<VertexSet> one{{0, 1}};
  CHECK(haxell_condition(k(3), one).ok);

  const std::vector<VertexSet> with_empty{{0}, {}, {2}};
  const HaxellResult e = haxell_condition(Graph(3), with_empty);
  CHECK_FALSE(e.ok);
  CHECK(e.violating == std::vector<int>{1});

  const std::vector<VertexSet> adjacent{{0}, {1}};
  const HaxellResult a = haxell_condition(k(2), adjacent);
  CHECK_FALSE(a.ok);
  CHECK(a.violating == std::vector<int>{0, 1});
}

TEST_CASE("find_isr") {
  const std::vector<VertexSet> singles{{0}, {2}, {4}};
  const auto r = find_isr(Graph(5), singles);
  REQUIRE(r);
  CHECK(r->members == VertexSet{0, 2, 4});

  const std::vector<VertexSet> c4_cells{{0}, {2}};
  const auto c = find_isr(c4(), c4_cells);
  REQUIRE(c);
  CHECK(c->members == VertexSet{0, 2});

  const std::vector<VertexSet> k2_cells{{0}, {1}};
  CHECK_FALSE(find_isr(k(2), k2_cells));
}

TEST_CASE("max_partial_isr") {
  const std::vector<VertexSet> k2_cells{{0}, {1}};
  CHECK(max_partial_isr(k(2), k2_cells).size() == 1);

  const std::vector<VertexSet> free_cells{{0, 1}, {2}, {3, 4}};
  CHECK(max_partial_isr(Graph(5), free_cells).size() == 3);

  const std::vector<VertexSet> c4_cells{{0}, {1}, {2}};
  const PartialIsr r = max_partial_isr(c4(), c4_cells);
  CHECK(r.size() == 2);
  CHECK(is_partial_isr(c4(), c4_cells, r));
}

TEST_CASE("ISR searches agree with transversal enumeration") {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = uniform_int(rng, 1, 7);
    const Graph g = random_graph(n, 0.4, rng);
    const int count = uniform_int(rng, 1, n);
    std::vector<VertexSet> cells(count);
    for (Vertex v = 0; v < n; ++v) {
      const int slot = uniform_int(rng, -1, count - 1);
      if (slot >= 0) cells[slot].insert(v);
    }
    const auto full = find_isr(g, cells);
    CHECK(full.has_value() == oracle::has_isr(g, cells));
    if (full) CHECK(is_partial_isr(g, cells, *full));
    const PartialIsr part = max_partial_isr(g, cells);
    CHECK(part.size() == oracle::max_partial_isr(g, cells));
    CHECK(is_partial_isr(g, cells, part));
    if (haxell_condition(g, cells).ok) CHECK(full.has_value());
  }
}

TEST_CASE("two partial ISRs") {
  SUBCASE("independent D gives an empty family") {
    const IsrPair p = two_partial_isrs(Graph::cycle(6), VertexSet{0, 3}, VertexSet{0, 3}, {});
    CHECK(p.partition.cells.empty());
    CHECK(p.r1.members.empty());
    CHECK(p.r2.members.empty());
  }
  SUBCASE("one cell") {
    // P4 with D = {1,2} and F = {1}: the single cell is {3}.
    const IsrPair p = two_partial_isrs(p4(), VertexSet{1, 2}, VertexSet{1}, order({2}));
    REQUIRE(p.partition.cells.size() == 1);
    CHECK(p.r1.size() + p.r2.size() == 1);
    CHECK(is_isr_pair(p4(), p));
  }
  SUBCASE("C6 with the optimal D") {
    const Graph g = Graph::cycle(6);
    const DominationCertificate c = optimal_dominating_set(g);
    for (VertexSet f : maximal_independent_within(g, c.d_set)) {
      std::vector<Vertex> rest = (c.d_set - f).to_vector();
      do {
        CHECK(is_isr_pair(g, two_partial_isrs(g, c.d_set, f, rest)));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  SUBCASE("every minimum D and maximal F on six vertices") {
    for (const Graph& g : all_graphs(6)) {
      if (has_isolated_vertex(g)) continue;
      for (VertexSet d : enumerate_min_dominating_sets(g)) {
        for (VertexSet f : maximal_independent_within(g, d)) {
          std::vector<Vertex> rest = (d - f).to_vector();
          do {
            const IsrPair p = two_partial_isrs(g, d, f, rest);
            CHECK(is_isr_pair(g, p));
            const int k = static_cast<int>(rest.size());
            CHECK(2 * max_partial_isr(g, p.partition.cells).size() >= k);
          } while (std::next_permutation(rest.begin(), rest.end()));
        }
      }
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(two_partial_isrs(c4(), VertexSet{0, 1, 2}, VertexSet{0, 2}, order({1})), PreconditionViolated);
    CHECK_THROWS_AS(two_partial_isrs(c4(), VertexSet{0, 1}, VertexSet{}, order({0, 1})), PreconditionViolated);
    CHECK_THROWS_AS(two_partial_isrs(c4(), VertexSet{0, 1}, VertexSet{0}, order({0})), PreconditionViolated);
  }
}

TEST_CASE("greedy maximal expansions") {
  CHECK(expand_to_maximal_independent(Graph(3), VertexSet{}, VertexSet{0, 1, 2}) == VertexSet{0, 1, 2});
  CHECK(expand_to_maximal_independent(c4(), VertexSet{0, 2}, c4().vertices()) == VertexSet{0, 2});
  CHECK(expand_to_maximal_independent(c5(), VertexSet{0}, c5().vertices()) == VertexSet{0, 2});
  CHECK_THROWS_AS(expand_to_maximal_independent(c4(), VertexSet{0, 1}, c4().vertices()), SeedNotIndependent);
  CHECK(expand_to_maximal_bipartite(c5(), VertexSet{}, c5().vertices()) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("independent-set construction") {
  const InverseCertificate star = inddom_construct(Graph::star(4), VertexSet{0}, VertexSet{0});
  CHECK(star.t_set == VertexSet{1, 2, 3, 4});
  check_certificate(Graph::star(4), star);

  const InverseCertificate cyc = inddom_construct(c4(), VertexSet{0, 2}, VertexSet{0, 2});
  CHECK(cyc.t_set == VertexSet{1, 3});
  CHECK(cyc.route == "inddom");
  check_certificate(c4(), cyc);

  CHECK_THROWS_AS(inddom_construct(c4(), VertexSet{0, 1}, VertexSet{0, 1}), PreconditionViolated);
}

TEST_CASE("main construction") {
  const InverseCertificate k2 = theorem_main_construct(k(2), VertexSet{0});
  CHECK(k2.t_set == VertexSet{1});
  CHECK(k2.bound_value == 1);
  CHECK(k2.bound_kind == BoundKind::main_theorem);

  const InverseCertificate star = theorem_main_construct(Graph::star(4), VertexSet{0});
  CHECK(star.t_set == VertexSet{1, 2, 3, 4});
  CHECK(star.bound_value == 4);

  CHECK_THROWS_AS(theorem_main_construct(disjoint_union(k(1), k(2)), VertexSet{0, 1}), HasIsolates);
  CHECK_THROWS_AS(theorem_main_construct(c4(), VertexSet{0, 1, 2}), PreconditionViolated);
}

TEST_CASE("bipartite construction") {
  const InverseCertificate k2 = bipartite_inverse_construct(k(2), VertexSet{0});
  CHECK(k2.t_set == VertexSet{1});
  CHECK(k2.bound_value == 2);

  const InverseCertificate cyc = bipartite_inverse_construct(c4(), VertexSet{0, 2});
  CHECK(cyc.t_set.subset_of(VertexSet{1, 3}));
  CHECK(cyc.bound_value == 4);
  check_certificate(c4(), cyc);
}

TEST_CASE("constructions on every isolate-free graph up to six vertices") {
  for (const Graph& g : all_graphs_up_to(6)) {
    if (g.n() == 0 || has_isolated_vertex(g)) continue;
    for (VertexSet d : enumerate_min_dominating_sets(g)) {
      check_certificate(g, theorem_main_construct(g, d));
      check_certificate(g, bipartite_inverse_construct(g, d));
      if (auto s = find_special_independent(g, d)) check_certificate(g, inddom_construct(g, d, *s));
    }
  }
}

TEST_CASE("special independent set") {
  CHECK(find_special_independent(c4(), VertexSet{0, 2}) == VertexSet{0, 2});
  CHECK(find_special_independent(k(4), VertexSet{0}) == VertexSet{0});
  const auto s = find_special_independent(c4(), VertexSet{0, 1});
  REQUIRE(s);
  CHECK(is_independent(c4(), *s));
  CHECK((VertexSet{0, 1} - *s).subset_of(closed_neighborhood(c4(), *s - VertexSet{0, 1})));
}

TEST_CASE("special independent set is found exactly when one exists") {
  for (const Graph& g : all_graphs_up_to(6)) {
    if (g.n() == 0 || has_isolated_vertex(g)) continue;
    for (VertexSet d : enumerate_min_dominating_sets(g)) {
      bool exists = false;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n()) && !exists; ++m) {
        const VertexSet s(m);
        exists = is_independent(g, s) && (d - s).subset_of(closed_neighborhood(g, s - d));
      }
      const auto found = find_special_independent(g, d);
      CHECK(found.has_value() == exists);
    }
  }
}

TEST_CASE("trichotomy") {
  const TrichotomyOutcome k2 = biglemma_trichotomy(k(2), optimal_dominating_set(k(2)));
  CHECK(k2.found_s);
  const TrichotomyOutcome cyc = biglemma_trichotomy(c4(), optimal_dominating_set(c4()));
  CHECK(cyc.found_s == VertexSet{0, 2});
  for (const Graph& g : all_graphs_up_to(7)) {
    if (g.n() == 0 || has_isolated_vertex(g)) continue;
    const DominationCertificate opt = optimal_dominating_set(g);
    const TrichotomyOutcome t = biglemma_trichotomy(g, opt);
    if (t.found_s) {
      CHECK(is_independent(g, *t.found_s));
      CHECK((opt.d_set - *t.found_s).subset_of(closed_neighborhood(g, *t.found_s - opt.d_set)));
    } else {
      CHECK((t.cond1 && t.cond2 && t.cond3));
    }
  }
}

TEST_CASE("private neighbour lemma") {
  CHECK(lemma41_check(c4(), optimal_dominating_set(c4())).ok);
  for (const Graph& g : all_graphs_up_to(7)) {
    if (g.n() == 0 || has_isolated_vertex(g)) continue;
    CHECK(lemma41_check(g, optimal_dominating_set(g)).ok);
  }
}

TEST_CASE("private neighbour lemma needs an optimal D") {
  // Some minimum but non-optimal D fails the check on small graphs.
  bool violated = false;
  for (const Graph& g : all_graphs_up_to(6)) {
    if (g.n() == 0 || has_isolated_vertex(g)) continue;
    for (VertexSet d : enumerate_min_dominating_sets(g)) {
      const PrivateNeighborReport r = lemma41_check(g, describe_dominating_set(g, d));
      if (r.ok) continue;
      violated = true;
      for (Vertex v : r.violators) CHECK(private_neighbors(g, d, v).size() < 2);
    }
  }
  CHECK(violated);
}

TEST_CASE("superISRs") {
  SUBCASE("wrong domination number") {
    const Graph g = pendant_pairs(c4());
    CHECK_THROWS_AS(superisrs(g, optimal_dominating_set(g)), PreconditionViolated);
  }
  SUBCASE("pendant pairs on a five-cycle") {
    const Graph g = pendant_pairs(c5());
    const DominationCertificate opt = optimal_dominating_set(g);
    REQUIRE(opt.d_set == c5().vertices());
    const SuperIsrs s = superisrs(g, opt);
    std::vector<Vertex> sorted = s.ordering;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == opt.d_set.to_vector());
    CHECK(s.partition.cells == cells_by_definition(g, s.ordering, g.vertices() - opt.d_set));
    CHECK(is_partial_isr(g, s.partition.cells, s.r1));
    CHECK(is_partial_isr(g, s.partition.cells, s.r2));
    CHECK(s.r1.indices() == std::vector<int>{0, 1, 2});
    CHECK(s.r2.indices() == std::vector<int>{3, 4});
    check_certificate(g, gamma5_superisr_route(g, opt));
  }
}

TEST_CASE("gamma five construction") {
  SUBCASE("five disjoint edges") {
    const Graph g = pad_with_k2(Graph(0), 5);
    const InverseCertificate c = gamma5_construct(g);
    CHECK(c.d_set.size() == 5);
    CHECK(c.t_set.size() == 5);
    CHECK(c.bound_value == 5);
    check_certificate(g, c);
  }
  SUBCASE("five disjoint claws") {
    Graph g = Graph::star(3);
    for (int i = 0; i < 4; ++i) g = disjoint_union(g, Graph::star(3));
    CHECK(gamma(g).value == 5);
    const InverseCertificate c = gamma5_construct(g);
    // Every leaf sees only its center, so T must hold all fifteen leaves.
    CHECK(c.t_set.size() == 15);
    CHECK(c.bound_value == 15);
    check_certificate(g, c);
  }
  SUBCASE("cycle of cliques") {
    const Graph g = clique_cycle(15, 3);
    REQUIRE(gamma(g).value == 5);
    check_certificate(g, gamma5_construct(g));
  }
  SUBCASE("pendant pairs") {
    const Graph g = pendant_pairs(c5());
    const InverseCertificate c = gamma5_construct(g);
    CHECK(c.t_set.size() <= alpha(g).value);
    check_certificate(g, c);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(gamma5_construct(pendant_pairs(c4())), PreconditionViolated);
    CHECK_THROWS_AS(gamma5_construct(disjoint_union(pad_with_k2(Graph(0), 4), k(1))), HasIsolates);
  }
  SUBCASE("generated corpus") {
    for (const Graph& g : gamma5_corpus(40, 9)) check_certificate(g, gamma5_construct(g));
  }
}

TEST_CASE("padding with disjoint edges") {
  CHECK(pad_with_k2(k(2), 0) == k(2));
  const Graph two = pad_with_k2(k(2), 1);
  CHECK(two == disjoint_union(k(2), k(2)));
  CHECK(gamma(two).value == 2);
  CHECK(alpha(two).value == 2);
  const Graph c = pad_with_k2(c4(), 2);
  CHECK(c.n() == 8);
  CHECK(gamma(c).value == 4);
  CHECK(alpha(c).value == 4);
  CHECK_THROWS_AS(pad_with_k2(Graph(60), 3), TooLarge);
}
