#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "invdom/canonical.hpp"
#include "invdom/corpus.hpp"
#include "invdom/graph6.hpp"
#include "invdom/report.hpp"
#include "invdom/selftest.hpp"
#include "invdom/solvers.hpp"
#include "invdom/sweep.hpp"

using namespace invdom;
using namespace invdom::fixtures;

TEST_CASE("check list parsing") {
  const CheckSet all = CheckSet::parse("all");
  CHECK((all.three_halves && all.main_theorem && all.strong && all.bipartite));
  const CheckSet some = CheckSet::parse("conjecture,b");
  CHECK(some.bipartite);
  CHECK_FALSE(some.three_halves);
  CHECK_FALSE(some.main_theorem);
  CHECK_FALSE(some.strong);
  CHECK_THROWS_AS(CheckSet::parse("gamma"), std::invalid_argument);
}

TEST_CASE("single graph analysis") {
  const GraphReport k2 = analyze_graph(k(2));
  CHECK(k2.gamma == 1);
  CHECK(k2.alpha == 1);
  CHECK(k2.inv_gamma == 1);
  CHECK(k2.conjecture_ok == true);
  CHECK_FALSE(k2.three_halves_ok);  // cliques are exempt

  const GraphReport cyc = analyze_graph(c4());
  CHECK(cyc.graph6 == "Cl");
  CHECK(cyc.gamma == 2);
  CHECK(cyc.alpha == 2);
  CHECK(cyc.inv_gamma == 2);
  CHECK(cyc.b == 4);
  CHECK(cyc.three_halves_ok == true);
  CHECK(cyc.main_thm_ok == true);
  CHECK_FALSE(cyc.failed());

  const GraphReport iso = analyze_graph(disjoint_union(k(1), k(2)));
  CHECK_FALSE(iso.inv_gamma);
  CHECK(iso.skipped());
  CHECK_FALSE(iso.failed());
  CHECK_FALSE(iso.warnings.empty());
}

TEST_CASE("report JSON has a fixed field order") {
  const auto j = to_json(analyze_graph(c4()), false);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"graph6", "n", "m", "gamma", "alpha", "inv_gamma", "strong_inv_gamma", "b",
                                         "conjecture_ok", "three_halves_ok", "main_thm_ok", "main_thm_size",
                                         "main_thm_bound"});
  CHECK(j.dump() ==
        R"({"graph6":"Cl","n":4,"m":4,"gamma":2,"alpha":2,"inv_gamma":2,"strong_inv_gamma":2,"b":4,)"
        R"("conjecture_ok":true,"three_halves_ok":true,"main_thm_ok":true,"main_thm_size":2,"main_thm_bound":2})");
  CHECK(to_json(analyze_graph(k(3)))["three_halves_ok"] == "n/a");
  CHECK(to_json(analyze_graph(k(3))).contains("elapsed_micros"));
}

TEST_CASE("certificate checker rejects bad certificates") {
  InverseCertificate c{VertexSet{0, 2}, VertexSet{1, 3}, BoundKind::alpha, 2, "test"};
  CHECK_FALSE(verify_certificate(c4(), c));
  InverseCertificate shared = c;
  shared.t_set = VertexSet{0, 1};
  CHECK(verify_certificate(c4(), shared));
  InverseCertificate weak = c;
  weak.t_set = VertexSet{1};
  CHECK(verify_certificate(c4(), weak));
  InverseCertificate over = c;
  over.bound_value = 1;
  CHECK(verify_certificate(c4(), over));
  InverseCertificate big = c;
  big.d_set = VertexSet{0, 1, 2};
  CHECK(verify_certificate(c4(), big));

  const auto j = to_json(c);
  CHECK(j.dump() == R"({"d":[0,2],"t":[1,3],"t_size":2,"bound_kind":"alpha","bound_value":2,"route":"test"})");
}

TEST_CASE("corpus sizes match the known counts") {
  const std::vector<std::size_t> all{1, 1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{1, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const std::vector<Graph> gs = all_graphs(n);
    CHECK(gs.size() == all[n]);
    std::size_t conn = 0;
    for (const Graph& g : gs) conn += is_connected(g) ? 1 : 0;
    if (n >= 1) CHECK(conn == connected[n]);
  }
  CHECK(all_graphs_up_to(5, true).size() == 1 + 1 + 2 + 6 + 21);
}

TEST_CASE("canonical form ignores labelling") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(uniform_int(rng, 1, 10), 0.4, rng);
    const Graph c = canonical_form(g);
    CHECK(c.edge_count() == g.edge_count());
    CHECK(canonical_form(shuffle_labels(g, rng)) == c);
  }
  CHECK_FALSE(canonical_form(Graph::path(4)) == canonical_form(Graph::star(3)));
}

TEST_CASE("random generators are reproducible") {
  Rng a(99), b(99);
  for (int i = 0; i < 20; ++i) {
    CHECK(write_graph6(mixed_family_graph(12, 0.3, a)) == write_graph6(mixed_family_graph(12, 0.3, b)));
  }
  CHECK(uniform_int(a, 3, 3) == 3);
}

TEST_CASE("structured families") {
  CHECK(gamma(corona(c5())).value == 5);
  CHECK(gamma(pendant_pairs(c4())).value == 4);
  CHECK(clique_chain(3, 4).n() == 12);
  CHECK(clique_chain(3, 4).edge_count() == 3 * 6 + 2);
  CHECK(clique_cycle(4, 2).edge_count() == 4 * 1 + 4 * 4);
}

TEST_CASE("gamma five corpus") {
  const std::vector<Graph> gs = gamma5_corpus(60, 42);
  CHECK(gs.size() == 60);
  std::set<std::string> seen;
  for (const Graph& g : gs) {
    CHECK(g.n() <= 20);
    CHECK_FALSE(has_isolated_vertex(g));
    CHECK(gamma(g).value == 5);
    seen.insert(write_graph6(canonical_form(g)));
  }
  CHECK(seen.size() == gs.size());
  CHECK(write_graph6(gamma5_corpus(60, 42).back()) == write_graph6(gs.back()));
}

TEST_CASE("parallel sweep matches the serial reference") {
  const std::vector<Graph> gs = all_graphs_up_to(6);
  const auto serial = analyze_serial(gs);
  for (int jobs : {1, 2, 4}) {
    const auto par = analyze_parallel(gs, {}, jobs);
    REQUIRE(par.size() == serial.size());
    for (std::size_t i = 0; i < gs.size(); ++i) CHECK(to_json(par[i], false) == to_json(serial[i], false));
  }
}

TEST_CASE("parallel map keeps order and rethrows") {
  const auto squares = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (int i = 0; i < 100; ++i) CHECK(squares[i] == i * i);
  CHECK_THROWS_AS(parallel_map<int>(10, 3,
                                    [](std::size_t i) -> int {
                                      if (i == 7) throw std::runtime_error("boom");
                                      return 0;
                                    }),
                  std::runtime_error);
}

TEST_CASE("selftest passes and catches an injected fault") {
  const SelftestResult good = run_selftest(6);
  CHECK(good.passed());
  for (const PropertyTally& p : good.properties) CHECK_MESSAGE(p.checked > 0, p.name);
  const SelftestResult bad = run_selftest(6, SolverSuite::with_broken_gamma());
  CHECK_FALSE(bad.passed());
}
