#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "invdom/graph.hpp"

namespace invdom {

/// The solver entry points the selftest compares against brute force.
/// Replaceable so that a deliberately broken solver can be injected.
struct SolverSuite {
  std::function<int(const Graph&)> gamma;
  std::function<int(const Graph&)> alpha;
  std::function<int(const Graph&)> bipartite;
  std::function<std::optional<int>(const Graph&)> inverse_gamma;

  static SolverSuite standard();
  /// standard() with gamma off by one on graphs with at least two vertices.
  static SolverSuite with_broken_gamma();
};

struct PropertyTally {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::string first_failure;  // graph6 of the first failing graph
};

struct SelftestResult {
  std::vector<PropertyTally> properties;
  bool passed() const;
};

/// Runs every structural property over all graphs with at most max_n
/// vertices (generated in-process).
SelftestResult run_selftest(int max_n = 7, const SolverSuite& suite = SolverSuite::standard(), int jobs = 0);

}  // namespace invdom
