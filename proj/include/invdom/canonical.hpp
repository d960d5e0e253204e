#pragma once

#include "invdom/graph.hpp"

namespace invdom {

/// Relabelling of g that is identical for all graphs isomorphic to g.
/// Colour refinement plus individualisation, keeping the lexicographically
/// largest adjacency code over all leaves. Exponential on highly symmetric
/// graphs; intended for the small orders the generators work at.
Graph canonical_form(const Graph& g);

}  // namespace invdom
