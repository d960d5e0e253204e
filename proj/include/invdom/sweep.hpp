#pragma once

// Per-graph analysis over a corpus. `analyze_serial` is the plain loop kept
// as the reference; `analyze_parallel` spreads graphs over OpenMP threads
// with dynamic scheduling and writes each report to its input slot, so the
// two produce the same vector apart from timings.

#include <span>
#include <vector>

#include "invdom/report.hpp"

namespace invdom {

/// Number of worker threads: INVDOM_JOBS if set and positive, else the
/// OpenMP default.
int default_jobs();

std::vector<GraphReport> analyze_serial(std::span<const Graph> graphs, const CheckSet& checks = {});
std::vector<GraphReport> analyze_parallel(std::span<const Graph> graphs, const CheckSet& checks = {}, int jobs = 0);

/// Evaluate `fn(i)` for i in [0, count) on `jobs` threads. Results keep
/// input order. Exceptions from workers are rethrown (the first by index).
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, int jobs, Fn&& fn);

}  // namespace invdom

#include "invdom/sweep_impl.hpp"
