// invdom: exact domination invariants and inverse-domination certificates
// for small graphs. See README.md for the subcommands.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "invdom/constructions.hpp"
#include "invdom/corpus.hpp"
#include "invdom/errors.hpp"
#include "invdom/graph6.hpp"
#include "invdom/report.hpp"
#include "invdom/selftest.hpp"
#include "invdom/sweep.hpp"

namespace {

using namespace invdom;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kPrecondition = 3, kInternal = 4 };

// Lazily opened sink: the file only appears once something is written.
class CounterexampleFile {
 public:
  explicit CounterexampleFile(std::string path) : path_(std::move(path)) {}
  void add(const std::string& g6) {
    if (!out_) out_ = std::make_unique<std::ofstream>(path_);
    *out_ << g6 << "\n";
    ++count_;
  }
  long count() const { return count_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> out_;
  long count_ = 0;
};

// stdout unless a path is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string input;
  std::string edges;
  std::string format = "both";
};

int run_analyze(const AnalyzeArgs& a) {
  std::vector<Graph> graphs;
  try {
    if (!a.edges.empty()) {
      std::ifstream in(a.edges);
      if (!in) throw std::runtime_error("cannot open edge list " + a.edges);
      graphs.push_back(parse_edge_list(in));
    }
    if (!a.input.empty()) {
      if (std::filesystem::is_regular_file(a.input)) {
        std::ifstream in(a.input);
        int line_no = 0;
        for (const auto& line : read_lines(in)) {
          ++line_no;
          if (blank(line)) continue;
          try {
            graphs.push_back(parse_graph6(line));
          } catch (const ParseError& e) {
            throw std::runtime_error(a.input + ":" + std::to_string(line_no) + ": " + e.what());
          }
        }
      } else {
        graphs.push_back(parse_graph6(a.input));
      }
    }
    if (graphs.empty()) throw std::runtime_error("no graph given (pass a graph6 string, a file, or --edges)");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  bool failed = false;
  for (const Graph& g : graphs) {
    const GraphReport r = analyze_graph(g);
    for (const auto& w : r.warnings) std::cerr << "warning: " << r.graph6 << ": " << w << "\n";
    if (a.format != "json") std::cout << to_pretty(r);
    if (a.format != "pretty") std::cout << to_json(r).dump() << "\n";
    failed = failed || r.failed();
  }
  return failed ? kCheckFailed : kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string input;
  bool strict = false;
  int jobs = 0;
  std::string out;
  std::string checks = "all";
  std::string counterexamples = "counterexamples.g6";
  int exhaustive = -1;
  bool connected = false;
  bool no_timings = false;
};

struct VerifyTotals {
  long graphs = 0;
  long skipped = 0;
  long parse_errors = 0;
  long conjecture_failures = 0;
  long three_halves_failures = 0;
  long main_failures = 0;
};

int run_verify(const VerifyArgs& a) {
  CheckSet checks;
  try {
    checks = CheckSet::parse(a.checks);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  const int jobs = a.jobs > 0 ? a.jobs : default_jobs();

  std::unique_ptr<Output> out;
  std::ifstream file;
  std::istream* in = nullptr;
  try {
    out = std::make_unique<Output>(a.out);
    if (a.exhaustive < 0) {
      if (a.input.empty() || a.input == "-") {
        in = &std::cin;
      } else {
        file.open(a.input);
        if (!file) throw std::runtime_error("cannot open " + a.input);
        in = &file;
      }
    } else if (a.exhaustive > 10) {
      throw std::runtime_error("--exhaustive supports n <= 10");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  CounterexampleFile dump(a.counterexamples);
  VerifyTotals totals;

  auto process = [&](const std::vector<Graph>& batch) {
    const auto reports = analyze_parallel(batch, checks, jobs);
    for (const auto& r : reports) {
      ++totals.graphs;
      if (r.skipped()) ++totals.skipped;
      if (r.conjecture_ok == false) ++totals.conjecture_failures;
      if (r.three_halves_ok == false) ++totals.three_halves_failures;
      if (r.main_thm_ok == false) ++totals.main_failures;
      if (r.failed()) dump.add(r.graph6);
      out->stream() << to_json(r, !a.no_timings).dump() << "\n";
    }
  };

  if (a.exhaustive >= 0) {
    process(all_graphs_up_to(a.exhaustive, a.connected));
  } else {
    constexpr std::size_t kBatch = 2048;
    std::vector<Graph> batch;
    std::string line;
    long line_no = 0;
    while (std::getline(*in, line)) {
      ++line_no;
      if (blank(line)) continue;
      try {
        Graph g = parse_graph6(line);
        if (!a.connected || is_connected(g)) batch.push_back(std::move(g));
      } catch (const ParseError& e) {
        ++totals.parse_errors;
        std::cerr << "line " << line_no << ": " << e.what() << "\n";
        if (a.strict) return kInputError;
      }
      if (batch.size() == kBatch) {
        process(batch);
        batch.clear();
      }
    }
    process(batch);
  }
  out->stream().flush();

  std::cerr << "graphs " << totals.graphs << ", skipped (isolates) " << totals.skipped << ", parse errors "
            << totals.parse_errors << "\n"
            << "failures: conjecture " << totals.conjecture_failures << ", three-halves "
            << totals.three_halves_failures << ", main construction " << totals.main_failures << "\n";
  if (dump.count() > 0) {
    std::cerr << dump.count() << " counterexample(s) written to " << dump.path() << "\n";
    return kCheckFailed;
  }
  return kOk;
}

// -------------------------------------------------------------- construct

struct ConstructArgs {
  std::string graph6;
  std::string which;
};

int run_construct(const ConstructArgs& a) {
  Graph g;
  try {
    g = parse_graph6(a.graph6);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  auto debug_dump = [&](const std::string& what) {
    nlohmann::ordered_json j;
    j["event"] = "internal_contradiction";
    j["graph6"] = a.graph6;
    j["which"] = a.which;
    j["n"] = g.n();
    j["edges"] = g.edges();
    j["message"] = what;
    std::cerr << j.dump(2) << "\n";
  };

  InverseCertificate cert;
  try {
    if (a.which == "gamma5") {
      cert = gamma5_construct(g);
    } else {
      if (g.n() == 0 || has_isolated_vertex(g)) throw HasIsolates();
      const VertexSet d = optimal_dominating_set(g).d_set;
      if (a.which == "main") {
        cert = theorem_main_construct(g, d);
      } else if (a.which == "bipartite") {
        cert = bipartite_inverse_construct(g, d);
      } else {
        auto s = find_special_independent(g, d);
        if (!s) throw PreconditionViolated("optimal D has no independent S with S - D dominating D - S");
        cert = inddom_construct(g, d, *s);
      }
    }
  } catch (const HasIsolates& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalContradiction& e) {
    debug_dump(e.what());
    return kInternal;
  }

  if (auto problem = verify_certificate(g, cert)) {
    debug_dump("certificate failed re-verification: " + *problem);
    return kInternal;
  }
  nlohmann::ordered_json j;
  j["graph6"] = write_graph6(g);
  j["which"] = a.which;
  const nlohmann::ordered_json body = to_json(cert);
  for (const auto& [k, v] : body.items()) j[k] = v;
  j["verified"] = true;
  std::cout << j.dump() << "\n";
  return kOk;
}

// ----------------------------------------------------------------- search

struct SearchArgs {
  int n = 10;
  double p = 0.3;
  int count = 1000;
  std::uint64_t seed = 1;
  int jobs = 0;
  std::string out;
  std::string counterexamples = "counterexamples.g6";
};

struct SearchRow {
  std::string graph6;
  int n = 0;
  int gamma = 0;
  int alpha = 0;
  std::optional<int> inv_gamma;
  int main_size = 0;
  int main_bound = 0;
};

// a/b > c/d for positive denominators.
bool ratio_greater(long a, long b, long c, long d) { return a * d > c * b; }

int run_search(const SearchArgs& a) {
  if (a.n < 1 || a.n > 20 || a.p < 0 || a.p > 1 || a.count < 0) {
    std::cerr << "error: need 1 <= n <= 20, 0 <= p <= 1, count >= 0\n";
    return kInputError;
  }
  std::unique_ptr<Output> out;
  try {
    out = std::make_unique<Output>(a.out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  // Generation is sequential so the corpus depends only on the seed.
  Rng rng(a.seed);
  std::vector<Graph> graphs;
  graphs.reserve(a.count);
  for (int i = 0; i < a.count; ++i) graphs.push_back(mixed_family_graph(a.n, a.p, rng));

  const auto rows = parallel_map<SearchRow>(graphs.size(), a.jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    SearchRow r;
    r.graph6 = write_graph6(g);
    r.n = g.n();
    const Witnessed gam = gamma(g);
    r.gamma = gam.value;
    r.alpha = alpha(g).value;
    if (g.n() > 0 && !has_isolated_vertex(g)) {
      r.inv_gamma = inverse_gamma(g).first;
      const auto c = theorem_main_construct(g, gam.witness);
      r.main_size = c.t_set.size();
      r.main_bound = c.bound_value;
    }
    return r;
  });

  CounterexampleFile dump(a.counterexamples);
  long best_inv_num = 0, best_inv_den = 1, best_con_num = 0, best_con_den = 1;
  long skipped = 0, tight_logged = 0;
  constexpr long kTightLogLimit = 10;
  auto line = [&](std::size_t i, const SearchRow& r, const char* event) {
    nlohmann::ordered_json j;
    j["index"] = i;
    j["event"] = event;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["gamma"] = r.gamma;
    j["alpha"] = r.alpha;
    j["inv_gamma"] = r.inv_gamma ? nlohmann::ordered_json(*r.inv_gamma) : nlohmann::ordered_json(nullptr);
    j["main_size"] = r.main_size;
    j["main_bound"] = r.main_bound;
    out->stream() << j.dump() << "\n";
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SearchRow& r = rows[i];
    if (!r.inv_gamma) {
      ++skipped;
      continue;
    }
    const int inv = *r.inv_gamma;
    if (inv > r.alpha) {
      line(i, r, "counterexample");
      dump.add(r.graph6);
    }
    if (ratio_greater(inv, r.alpha, best_inv_num, best_inv_den)) {
      best_inv_num = inv;
      best_inv_den = r.alpha;
      line(i, r, "inverse_ratio_record");
    } else if (inv == r.alpha && tight_logged < kTightLogLimit) {
      ++tight_logged;
      line(i, r, "tight");
    }
    if (ratio_greater(r.main_size, r.main_bound, best_con_num, best_con_den)) {
      best_con_num = r.main_size;
      best_con_den = r.main_bound;
      line(i, r, "construction_ratio_record");
    }
  }
  nlohmann::ordered_json s;
  s["event"] = "summary";
  s["count"] = a.count;
  s["n"] = a.n;
  s["p"] = a.p;
  s["seed"] = a.seed;
  s["skipped"] = skipped;
  s["max_inverse_ratio"] = {best_inv_num, best_inv_den};
  s["max_construction_ratio"] = {best_con_num, best_con_den};
  s["counterexamples"] = dump.count();
  out->stream() << s.dump() << "\n";
  return dump.count() > 0 ? kCheckFailed : kOk;
}

// --------------------------------------------------------------- selftest

int run_selftest_cmd(int max_n, int jobs, const std::string& fault) {
  SolverSuite suite = SolverSuite::standard();
  if (fault == "gamma") {
    suite = SolverSuite::with_broken_gamma();
  } else if (!fault.empty()) {
    std::cerr << "error: unknown fault '" << fault << "'\n";
    return kInputError;
  }
  const SelftestResult res = run_selftest(max_n, suite, jobs);
  for (const auto& p : res.properties) {
    std::cout << (p.failed == 0 ? "PASS " : "FAIL ") << p.name << ": " << p.checked << " checked, " << p.failed
              << " failed";
    if (!p.first_failure.empty()) std::cout << " (first: " << p.first_failure << ")";
    std::cout << "\n";
  }
  std::cout << (res.passed() ? "selftest passed" : "selftest FAILED") << "\n";
  return res.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination invariants and inverse-domination certificates for small graphs"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report every invariant and bound check for a graph");
  analyze_cmd->add_option("input", analyze.input, "graph6 string or file of graph6 lines");
  analyze_cmd->add_option("--edges", analyze.edges, "Edge-list file (one 'u v' per line, 0-based)");
  analyze_cmd->add_option("--format", analyze.format, "pretty, json or both")
      ->check(CLI::IsMember({"pretty", "json", "both"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every graph of a graph6 corpus; JSONL report per graph");
  verify_cmd->add_option("input", verify.input, "graph6 file, or - for stdin");
  verify_cmd->add_flag("--strict", verify.strict, "Abort on the first malformed line");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default INVDOM_JOBS or all cores)");
  verify_cmd->add_option("--out", verify.out, "JSONL output file (default stdout)");
  verify_cmd->add_option("--checks", verify.checks, "Comma list of conjecture,three_halves,main,strong,b or all");
  verify_cmd->add_option("--counterexamples", verify.counterexamples, "graph6 dump for failing graphs");
  verify_cmd->add_option("--exhaustive", verify.exhaustive, "Use the built-in generator: all graphs up to N vertices");
  verify_cmd->add_flag("--connected", verify.connected, "Only connected graphs");
  verify_cmd->add_flag("--no-timings", verify.no_timings, "Omit elapsed_micros for reproducible output");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build and verify an inverse dominating set certificate");
  construct_cmd->add_option("graph6", construct.graph6, "graph6 string")->required();
  construct_cmd->add_option("--which", construct.which, "main, bipartite, gamma5 or inddom")
      ->required()
      ->check(CLI::IsMember({"main", "bipartite", "gamma5", "inddom"}));

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Random search for near-tight instances");
  search_cmd->add_option("--n", search.n, "Vertex count")->required();
  search_cmd->add_option("--p", search.p, "Edge probability")->required();
  search_cmd->add_option("--count", search.count, "Number of graphs")->required();
  search_cmd->add_option("--seed", search.seed, "RNG seed")->required();
  search_cmd->add_option("--jobs", search.jobs, "Worker threads");
  search_cmd->add_option("--out", search.out, "JSONL log file (default stdout)");
  search_cmd->add_option("--counterexamples", search.counterexamples, "graph6 dump for counterexamples");

  int selftest_n = 7;
  int selftest_jobs = 0;
  std::string fault;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in property suite");
  selftest_cmd->add_option("--max-n", selftest_n, "Largest order in the generated corpus")->check(CLI::Range(1, 8));
  selftest_cmd->add_option("--jobs", selftest_jobs, "Worker threads");
  selftest_cmd->add_option("--inject-fault", fault, "Negative control: break a solver (gamma)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze);
    if (*verify_cmd) return run_verify(verify);
    if (*construct_cmd) return run_construct(construct);
    if (*search_cmd) return run_search(search);
    if (*selftest_cmd) return run_selftest_cmd(selftest_n, selftest_jobs, fault);
  } catch (const InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
