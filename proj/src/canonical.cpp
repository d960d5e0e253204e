#include "invdom/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace invdom {
namespace {

using Cells = std::vector<std::vector<Vertex>>;
using Code = std::array<std::uint64_t, Graph::kMaxVertices>;

// Split cells by neighbour counts into every cell until stable. Only
// label-independent data decides the order of the new cells.
void refine(const Graph& g, Cells& cells) {
  while (true) {
    std::vector<VertexSet> masks;
    for (const auto& c : cells) {
      VertexSet m;
      for (Vertex v : c) m.insert(v);
      masks.push_back(m);
    }
    Cells next;
    for (const auto& c : cells) {
      if (c.size() == 1) {
        next.push_back(c);
        continue;
      }
      std::map<std::vector<int>, std::vector<Vertex>> groups;
      for (Vertex v : c) {
        std::vector<int> sig(masks.size());
        for (std::size_t j = 0; j < masks.size(); ++j) sig[j] = (g.neighbors(v) & masks[j]).size();
        groups[sig].push_back(v);
      }
      for (auto& [sig, vs] : groups) next.push_back(std::move(vs));
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  Graph run() {
    Cells start;
    if (g_.n() > 0) start.push_back(g_.vertices().to_vector());
    search(std::move(start));
    return Graph::from_rows(g_.n(), best_);
  }

 private:
  void search(Cells cells) {
    refine(g_, cells);
    auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (open == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t at = static_cast<std::size_t>(open - cells.begin());
    for (Vertex v : cells[at]) {
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + at);
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex u : cells[at])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + at + 1, cells.end());
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::array<int, Graph::kMaxVertices> label{};
    for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<int>(i);
    Code code{};
    for (int v = 0; v < g_.n(); ++v)
      for (Vertex u : g_.neighbors(v)) code[label[v]] |= std::uint64_t{1} << label[u];
    if (!have_ || code > best_) {
      best_ = code;
      have_ = true;
    }
  }

  const Graph& g_;
  Code best_{};
  bool have_ = false;
};

}  // namespace

Graph canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

}  // namespace invdom
