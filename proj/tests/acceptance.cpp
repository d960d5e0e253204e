// Acceptance run: one PASS/FAIL line per criterion. Every check below is
// exact integer arithmetic; there are no tolerances to tune.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "invdom/constructions.hpp"
#include "invdom/corpus.hpp"
#include "invdom/errors.hpp"
#include "invdom/graph6.hpp"
#include "invdom/oracle.hpp"
#include "invdom/report.hpp"
#include "invdom/solvers.hpp"
#include "invdom/sweep.hpp"

using namespace invdom;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kGamma5Count = 240;
constexpr int kPaddingBases = 100;
constexpr int kSampledOrderings = 24;
constexpr int kSampledLargeGraphs = 400;

struct Outcome {
  long checked = 0;
  long failures = 0;
  std::string first;  // description of the first failure
  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  void merge(const Outcome& o) {
    checked += o.checked;
    if (o.failures > 0 && failures == 0) first = o.first;
    failures += o.failures;
  }
};

bool isolate_free(const Graph& g) { return g.n() > 0 && !has_isolated_vertex(g); }

Outcome sweep(const std::vector<Graph>& graphs, const std::function<Outcome(const Graph&)>& check) {
  const auto parts = parallel_map<Outcome>(graphs.size(), 0, [&](std::size_t i) {
    try {
      return check(graphs[i]);
    } catch (const std::exception& e) {
      Outcome o;
      o.checked = 1;
      o.fail(write_graph6(graphs[i]) + ": " + e.what());
      return o;
    }
  });
  Outcome total;
  for (const Outcome& o : parts) total.merge(o);
  return total;
}

int failed_criteria = 0;

void report(int id, const char* name, const Outcome& o, double seconds, const std::string& extra = "") {
  const bool pass = o.failures == 0 && o.checked > 0;
  if (!pass) ++failed_criteria;
  std::printf("%s criterion %d (%s): %ld checks, %ld failures, %.1fs%s%s\n", pass ? "PASS" : "FAIL", id, name,
              o.checked, o.failures, seconds, extra.empty() ? "" : ", ", extra.c_str());
  if (o.failures > 0) std::printf("    first failure: %s\n", o.first.c_str());
  std::fflush(stdout);
}

template <class Fn>
void run(int id, const char* name, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string extra;
  Outcome o = body(extra);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(id, name, o, secs, extra);
}

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

// Straight transcription of the graph6 definition, kept apart from the
// library codec so the two can be compared.
std::string reference_graph6(const Graph& g) {
  std::string out(1, static_cast<char>(63 + g.n()));
  int acc = 0, bits = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

std::string describe(const Graph& g, VertexSet d) { return write_graph6(g) + " D=" + d.to_string(); }

}  // namespace

int main() {
  const std::vector<Graph> upto7 = all_graphs_up_to(7);
  const std::vector<Graph> upto8 = all_graphs_up_to(8);
  const std::vector<Graph> connected8 = all_graphs_up_to(8, true);

  run(1, "inverse domination conjecture, connected n<=8", [&](std::string& extra) {
    Outcome o = sweep(connected8, [](const Graph& g) {
      Outcome r;
      if (!isolate_free(g)) return r;
      r.checked = 1;
      const int inv = inverse_gamma(g).first;
      if (inv > alpha(g).value) r.fail(write_graph6(g) + " inverse gamma exceeds alpha");
      return r;
    });
    Rng rng(kSeed);
    std::vector<Graph> sampled;
    while (static_cast<int>(sampled.size()) < kSampledLargeGraphs) {
      Graph g = mixed_family_graph(uniform_int(rng, 9, 16), 0.1 + 0.3 * (rng() % 1000) / 1000.0, rng);
      if (isolate_free(g)) sampled.push_back(std::move(g));
    }
    o.merge(sweep(sampled, [](const Graph& g) {
      Outcome r;
      r.checked = 1;
      if (inverse_gamma(g).first > alpha(g).value) r.fail(write_graph6(g) + " inverse gamma exceeds alpha");
      return r;
    }));
    extra = std::to_string(connected8.size()) + " connected graphs (K1 skipped) plus " +
            std::to_string(kSampledLargeGraphs) + " sampled graphs on 9..16 vertices";
    return o;
  });

  run(2, "three-halves bound, isolate-free non-cliques n<=8", [&](std::string&) {
    return sweep(connected8, [](const Graph& g) {
      Outcome r;
      if (!isolate_free(g) || is_clique(g)) return r;
      r.checked = 1;
      const int inv = inverse_gamma(g).first;
      if (2 * inv > 3 * alpha(g).value - 2) r.fail(write_graph6(g));
      return r;
    });
  });

  run(3, "main construction, every minimum D, n<=7", [&](std::string&) {
    return sweep(upto7, [](const Graph& g) {
      Outcome r;
      if (!isolate_free(g)) return r;
      for (VertexSet d : enumerate_min_dominating_sets(g)) {
        ++r.checked;
        const InverseCertificate c = theorem_main_construct(g, d);
        const int bound = alpha(g).value + (d.size() - 1) / 2;
        if (auto bad = verify_certificate(g, c)) r.fail(describe(g, d) + " " + *bad);
        else if (c.bound_value != bound || c.t_set.size() > bound) r.fail(describe(g, d) + " bound");
      }
      return r;
    });
  });

  run(4, "two partial ISRs and the half-size partial ISR, n<=7", [&](std::string& extra) {
    std::atomic<long> sampled{0};
    Outcome o = sweep(upto7, [&](const Graph& g) {
      Outcome r;
      if (!isolate_free(g)) return r;
      Rng rng(kSeed ^ std::hash<std::string>{}(write_graph6(g)));
      for (VertexSet d : enumerate_min_dominating_sets(g)) {
        for (VertexSet f : maximal_independent_within(g, d)) {
          std::vector<Vertex> rest = (d - f).to_vector();
          const int k = static_cast<int>(rest.size());
          auto check = [&](const std::vector<Vertex>& ordering) {
            ++r.checked;
            const IsrPair p = two_partial_isrs(g, d, f, ordering);
            if (!is_isr_pair(g, p)) r.fail(describe(g, d) + " ISR pair invalid");
            if (2 * max_partial_isr(g, p.partition.cells).size() < k) r.fail(describe(g, d) + " partial ISR too small");
          };
          if (k <= 4) {
            do check(rest);
            while (std::next_permutation(rest.begin(), rest.end()));
          } else {
            for (int s = 0; s < kSampledOrderings; ++s) {
              std::shuffle(rest.begin(), rest.end(), rng);
              check(rest);
              ++sampled;
            }
          }
        }
      }
      return r;
    });
    extra = std::to_string(sampled.load()) + " sampled orderings";
    return o;
  });

  run(5, "private neighbours and trichotomy on the optimal D, n<=8", [&](std::string&) {
    return sweep(upto8, [](const Graph& g) {
      Outcome r;
      if (!isolate_free(g)) return r;
      r.checked = 1;
      const DominationCertificate opt = optimal_dominating_set(g);
      if (!lemma41_check(g, opt).ok) r.fail(write_graph6(g) + " private neighbour count");
      try {
        biglemma_trichotomy(g, opt);
      } catch (const LemmaViolated& e) {
        r.fail(write_graph6(g) + " " + e.what());
      }
      return r;
    });
  });

  run(6, "gamma = 5 construction", [&](std::string& extra) {
    const std::vector<Graph> corpus = gamma5_corpus(kGamma5Count, kSeed);
    std::atomic<long> cross{0};
    Outcome o = sweep(corpus, [&](const Graph& g) {
      Outcome r;
      r.checked = 1;
      const InverseCertificate c = gamma5_construct(g);
      const int a = alpha(g).value;
      if (auto bad = verify_certificate(g, c)) r.fail(write_graph6(g) + " " + *bad);
      else if (c.t_set.size() > a) r.fail(write_graph6(g) + " |T| exceeds alpha");
      if (g.n() <= 12) {
        ++cross;
        if (c.t_set.size() < inverse_gamma(g).first) r.fail(write_graph6(g) + " |T| below inverse gamma");
      }
      return r;
    });
    extra = std::to_string(corpus.size()) + " graphs, " + std::to_string(cross.load()) + " cross-checked";
    return o;
  });

  run(7, "solvers agree with brute force, n<=7", [&](std::string&) {
    return sweep(upto7, [](const Graph& g) {
      Outcome r;
      r.checked = 1;
      const std::string id = write_graph6(g);
      if (gamma(g).value != oracle::gamma(g)) r.fail(id + " gamma");
      if (alpha(g).value != oracle::alpha(g)) r.fail(id + " alpha");
      if (max_induced_bipartite(g).value != oracle::max_induced_bipartite(g)) r.fail(id + " b");
      if (isolate_free(g) && inverse_gamma(g).first != oracle::inverse_gamma(g)) r.fail(id + " inverse gamma");
      return r;
    });
  });

  run(8, "complement of a minimum dominating set dominates, n<=8", [&](std::string&) {
    return sweep(upto8, [](const Graph& g) {
      Outcome r;
      if (!isolate_free(g)) return r;
      for (VertexSet d : enumerate_min_dominating_sets(g)) {
        ++r.checked;
        if (!is_dominating(g, g.vertices() - d)) r.fail(describe(g, d));
      }
      return r;
    });
  });

  run(9, "padding with disjoint edges, t=1..3", [&](std::string&) {
    Rng rng(kSeed);
    std::vector<Graph> bases;
    while (static_cast<int>(bases.size()) < kPaddingBases) {
      Graph g = random_graph(uniform_int(rng, 2, 8), 0.2 + 0.5 * (rng() % 1000) / 1000.0, rng);
      if (isolate_free(g)) bases.push_back(std::move(g));
    }
    return sweep(bases, [](const Graph& g) {
      Outcome r;
      const int gm = gamma(g).value, al = alpha(g).value, inv = inverse_gamma(g).first;
      for (int t = 1; t <= 3; ++t) {
        ++r.checked;
        const Graph p = pad_with_k2(g, t);
        if (gamma(p).value != gm + t || alpha(p).value != al + t || inverse_gamma(p).first != inv + t)
          r.fail(write_graph6(g) + " t=" + std::to_string(t));
      }
      return r;
    });
  });

  run(10, "graph6 round trip and fixtures", [&](std::string&) {
    Outcome o = sweep(upto8, [](const Graph& g) {
      Outcome r;
      r.checked = 1;
      const std::string s = write_graph6(g);
      if (s != reference_graph6(g) || !(parse_graph6(s) == g)) r.fail(s);
      return r;
    });
    const std::pair<const char*, Graph> fixtures[] = {
        {"@", Graph::complete(1)}, {"A_", Graph::complete(2)}, {"Bw", Graph::complete(3)}};
    for (const auto& [text, expected] : fixtures) {
      ++o.checked;
      if (reference_graph6(expected) != text || !(parse_graph6(text) == expected)) o.fail(text);
    }
    return o;
  });

  std::printf("%s: %d of 10 criteria failed\n", failed_criteria == 0 ? "ALL PASS" : "FAILURES", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
