#pragma once

#include "invdom/graph.hpp"

namespace invdom::fixtures {

// P4: 0-1-2-3
inline Graph p4() { return Graph::path(4); }
// C4: edges 01, 12, 23, 30
inline Graph c4() { return Graph::cycle(4); }
inline Graph c5() { return Graph::cycle(5); }
inline Graph k(int n) { return Graph::complete(n); }

inline Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace invdom::fixtures
