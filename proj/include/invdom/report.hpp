#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invdom/graph.hpp"
#include "invdom/solvers.hpp"

namespace invdom {

/// Which optional checks a sweep runs. Gamma, alpha and the inverse
/// domination number are always computed.
struct CheckSet {
  bool three_halves = true;
  bool main_theorem = true;
  bool strong = true;
  bool bipartite = true;

  /// Comma separated subset of "conjecture,three_halves,main,strong,b",
  /// or "all". Throws std::invalid_argument on unknown names.
  static CheckSet parse(std::string_view list);
};

struct GraphReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::optional<int> gamma;
  std::optional<int> alpha;
  std::optional<int> inv_gamma;
  std::optional<int> strong_inv_gamma;
  std::optional<int> b;
  std::optional<bool> conjecture_ok;
  std::optional<bool> three_halves_ok;  // absent: not applicable (clique or isolates)
  std::optional<bool> main_thm_ok;
  std::optional<int> main_thm_size;
  std::optional<int> main_thm_bound;
  std::vector<std::string> warnings;
  std::int64_t elapsed_micros = 0;

  bool failed() const;
  /// Isolated vertices make the inverse domination number undefined.
  bool skipped() const { return !inv_gamma.has_value(); }
};

GraphReport analyze_graph(const Graph& g, const CheckSet& checks = {});

/// Stable field order; elapsed_micros is left out when `timings` is false
/// so that repeated runs can be compared byte for byte.
nlohmann::ordered_json to_json(const GraphReport& r, bool timings = true);
std::string to_pretty(const GraphReport& r);

/// Independent re-check of an inverse certificate against g: disjointness,
/// domination of both sets, |D| = gamma and |T| <= bound. Uses plain
/// adjacency scans rather than the bitset helpers. Empty when valid.
std::optional<std::string> verify_certificate(const Graph& g, const InverseCertificate& c);
nlohmann::ordered_json to_json(const InverseCertificate& c);

}  // namespace invdom
