#include "invdom/selftest.hpp"

#include <array>
#include <cstdint>

#include "invdom/constructions.hpp"
#include "invdom/corpus.hpp"
#include "invdom/errors.hpp"
#include "invdom/graph6.hpp"
#include "invdom/oracle.hpp"
#include "invdom/solvers.hpp"
#include "invdom/sweep.hpp"

namespace invdom {

SolverSuite SolverSuite::standard() {
  SolverSuite s;
  s.gamma = [](const Graph& g) { return invdom::gamma(g).value; };
  s.alpha = [](const Graph& g) { return invdom::alpha(g).value; };
  s.bipartite = [](const Graph& g) { return max_induced_bipartite(g).value; };
  s.inverse_gamma = [](const Graph& g) -> std::optional<int> {
    if (g.n() == 0 || has_isolated_vertex(g)) return std::nullopt;
    return invdom::inverse_gamma(g).first;
  };
  return s;
}

SolverSuite SolverSuite::with_broken_gamma() {
  SolverSuite s = standard();
  s.gamma = [](const Graph& g) { return invdom::gamma(g).value + (g.n() >= 2 ? 1 : 0); };
  return s;
}

bool SelftestResult::passed() const {
  for (const auto& p : properties)
    if (p.failed > 0) return false;
  return true;
}

namespace {

enum Prop : int {
  kGraph6RoundTrip,
  kGammaOracle,
  kAlphaOracle,
  kBipartiteOracle,
  kInverseOracle,
  kStrongOracle,
  kMinSetEnumeration,
  kGammaAtMostAlpha,
  kOre,
  kInverseChain,
  kBipartiteBounds,
  kOptimalKey,
  kPrivateNeighbors,
  kTrichotomy,
  kMainConstruction,
  kBipartiteConstruction,
  kInddomConstruction,
  kTwoPartialIsrs,
  kIsrCompleteness,
  kHaxellSoundness,
  kPadding,
  kPropCount
};

constexpr std::array<const char*, kPropCount> kNames = {
    "graph6 round trip",        "gamma = brute force",       "alpha = brute force",
    "b = brute force",          "inverse gamma = brute force", "strong inverse = brute force",
    "min dominating sets = brute force", "gamma <= alpha",   "Ore complement dominates",
    "inverse <= strong <= n - gamma",    "b >= alpha, b = n iff bipartite",
    "optimal set ranking",      "two private neighbours",    "trichotomy holds",
    "main construction bound",  "bipartite construction bound", "inddom construction bound",
    "two partial ISRs / half-size ISR", "ISR search complete", "Haxell condition sound",
    "K2 padding shifts invariants"};

struct Counts {
  std::array<long, kPropCount> checked{};
  std::array<long, kPropCount> failed{};
};

class GraphChecks {
 public:
  GraphChecks(const Graph& g, const SolverSuite& suite) : g_(g), suite_(suite) {}

  Counts run() {
    check(kGraph6RoundTrip, [&] { return parse_graph6(write_graph6(g_)) == g_; });
    const int gam = suite_.gamma(g_);
    const int alp = suite_.alpha(g_);
    check(kGammaOracle, [&] { return gam == oracle::gamma(g_); });
    check(kAlphaOracle, [&] { return alp == oracle::alpha(g_); });
    check(kBipartiteOracle, [&] { return suite_.bipartite(g_) == oracle::max_induced_bipartite(g_); });
    check(kMinSetEnumeration, [&] { return enumerate_min_dominating_sets(g_) == oracle::min_dominating_sets(g_); });
    check(kGammaAtMostAlpha, [&] { return gam <= alp; });
    check(kBipartiteBounds, [&] {
      const int b = suite_.bipartite(g_);
      return b >= alp && ((b == g_.n()) == induces_bipartite(g_, g_.vertices()));
    });

    const bool isolate_free = g_.n() > 0 && !has_isolated_vertex(g_);
    if (isolate_free) {
      const auto inv = suite_.inverse_gamma(g_);
      check(kInverseOracle, [&] { return inv == oracle::inverse_gamma(g_); });
      const int strong = strong_inverse_gamma(g_);
      check(kStrongOracle, [&] { return std::optional<int>(strong) == oracle::strong_inverse_gamma(g_); });
      check(kInverseChain, [&] { return inv && *inv <= strong && strong <= g_.n() - gam; });
      per_minimum_set(gam);
      optimal_checks();
      padding_checks(inv);
    }
    return counts_;
  }

 private:
  template <class Fn>
  void check(Prop p, Fn&& fn) {
    ++counts_.checked[p];
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++counts_.failed[p];
  }

  void per_minimum_set(int gam) {
    for (VertexSet d : enumerate_min_dominating_sets(g_)) {
      check(kOre, [&] { return d.size() == gam && oracle::dominates(g_, g_.vertices() - d); });
      check(kMainConstruction, [&] {
        const auto c = theorem_main_construct(g_, d);
        return !c.t_set.intersects(d) && oracle::dominates(g_, c.t_set) &&
               c.t_set.size() <= oracle::alpha(g_) + (gam - 1) / 2;
      });
      check(kBipartiteConstruction, [&] {
        const auto c = bipartite_inverse_construct(g_, d);
        return !c.t_set.intersects(d) && oracle::dominates(g_, c.t_set) &&
               c.t_set.size() <= oracle::max_induced_bipartite(g_);
      });
      const VertexSet f = expand_to_maximal_independent(g_, VertexSet{}, d);
      check(kTwoPartialIsrs, [&] {
        const auto order = (d - f).to_vector();
        const IsrPair pair = two_partial_isrs(g_, d, f, order);
        const PartialIsr best = max_partial_isr(g_, pair.partition.cells);
        return is_isr_pair(g_, pair) && 2 * best.size() >= static_cast<int>(order.size()) &&
               best.size() == oracle::max_partial_isr(g_, pair.partition.cells);
      });
      const StandardPartition p = standard_partition(g_, d.to_vector(), g_.vertices() - d);
      const bool found = find_isr(g_, p.cells).has_value();
      check(kIsrCompleteness, [&] { return found == oracle::has_isr(g_, p.cells); });
      check(kHaxellSoundness, [&] { return !haxell_condition(g_, p.cells).ok || found; });
    }
  }

  void optimal_checks() {
    const DominationCertificate cert = optimal_dominating_set(g_);
    check(kOptimalKey, [&] {
      if (describe_dominating_set(g_, cert.d_set).alpha_of_d != cert.alpha_of_d) return false;
      for (VertexSet d : oracle::min_dominating_sets(g_)) {
        const auto c = describe_dominating_set(g_, d);
        if (c.alpha_of_d > cert.alpha_of_d) return false;
        if (c.alpha_of_d == cert.alpha_of_d && c.induced_edges < cert.induced_edges) return false;
        if (c.alpha_of_d == cert.alpha_of_d && c.induced_edges == cert.induced_edges && d < cert.d_set) return false;
      }
      return true;
    });
    check(kPrivateNeighbors, [&] { return lemma41_check(g_, cert).ok; });
    check(kTrichotomy, [&] {
      biglemma_trichotomy(g_, cert);  // throws LemmaViolated on failure
      return true;
    });
    if (auto s = find_special_independent(g_, cert.d_set)) {
      check(kInddomConstruction, [&] {
        const auto c = inddom_construct(g_, cert.d_set, *s);
        return !c.t_set.intersects(cert.d_set) && oracle::dominates(g_, c.t_set) && c.t_set.size() <= oracle::alpha(g_);
      });
    }
  }

  void padding_checks(const std::optional<int>& inv) {
    if (g_.n() > 6) return;
    for (int t = 1; t <= 3 && g_.n() + 2 * t <= 12; ++t) {
      check(kPadding, [&] {
        const Graph padded = pad_with_k2(g_, t);
        return suite_.gamma(padded) == suite_.gamma(g_) + t && suite_.alpha(padded) == suite_.alpha(g_) + t &&
               inv && suite_.inverse_gamma(padded) == *inv + t;
      });
    }
  }

  const Graph& g_;
  const SolverSuite& suite_;
  Counts counts_;
};

}  // namespace

SelftestResult run_selftest(int max_n, const SolverSuite& suite, int jobs) {
  const std::vector<Graph> corpus = all_graphs_up_to(max_n);
  const auto per_graph =
      parallel_map<Counts>(corpus.size(), jobs, [&](std::size_t i) { return GraphChecks(corpus[i], suite).run(); });
  SelftestResult result;
  for (int p = 0; p < kPropCount; ++p) result.properties.push_back({kNames[p], 0, 0, {}});
  for (std::size_t i = 0; i < per_graph.size(); ++i) {
    for (int p = 0; p < kPropCount; ++p) {
      auto& tally = result.properties[p];
      tally.checked += per_graph[i].checked[p];
      tally.failed += per_graph[i].failed[p];
      if (per_graph[i].failed[p] > 0 && tally.first_failure.empty()) tally.first_failure = write_graph6(corpus[i]);
    }
  }
  return result;
}

}  // namespace invdom
