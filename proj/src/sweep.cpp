#include "invdom/sweep.hpp"

#include <cstdlib>
#include <string>

namespace invdom {

int default_jobs() {
  if (const char* env = std::getenv("INVDOM_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs > 0) return jobs;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

std::vector<GraphReport> analyze_serial(std::span<const Graph> graphs, const CheckSet& checks) {
  std::vector<GraphReport> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back(analyze_graph(g, checks));
  return out;
}

std::vector<GraphReport> analyze_parallel(std::span<const Graph> graphs, const CheckSet& checks, int jobs) {
  return parallel_map<GraphReport>(graphs.size(), jobs, [&](std::size_t i) { return analyze_graph(graphs[i], checks); });
}

}  // namespace invdom
