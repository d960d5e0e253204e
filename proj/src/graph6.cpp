#include "invdom/graph6.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace invdom {
namespace {

constexpr int kBias = 63;
constexpr int kMaxSmallOrder = 62;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);

  if (text.empty()) throw ParseError(ParseError::Kind::MalformedLength, "graph6: empty input");
  auto size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte > 127) throw ParseError(ParseError::Kind::NonAsciiByte, "graph6: non-ASCII size byte");
  int n = size_byte - kBias;
  if (n < 0 || n > kMaxSmallOrder)
    throw ParseError(ParseError::Kind::MalformedLength,
                     "graph6: size byte " + std::to_string(size_byte) + " out of range (only n <= 62 supported)");

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body_len = (bit_count + 5) / 6;
  std::string_view body = text.substr(1);

  for (std::size_t i = 0; i < body.size(); ++i) {
    auto c = static_cast<unsigned char>(body[i]);
    if (c < kBias || c > 126) {
      if (i >= body_len) break;  // reported as trailing garbage below
      throw ParseError(ParseError::Kind::NonAsciiByte,
                       "graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i + 1) +
                           " is outside the graph6 alphabet");
    }
  }
  if (body.size() < body_len)
    throw ParseError(ParseError::Kind::TruncatedBody, "graph6: expected " + std::to_string(body_len) +
                                                          " body bytes, got " + std::to_string(body.size()));
  if (body.size() > body_len)
    throw ParseError(ParseError::Kind::TrailingGarbage,
                     "graph6: " + std::to_string(body.size() - body_len) + " trailing byte(s)");

  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) { return ((body[idx / 6] - kBias) >> (5 - idx % 6)) & 1; };
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (bit(k)) edges.emplace_back(u, v);
  for (; k < body_len * 6; ++k)
    if (bit(k)) throw ParseError(ParseError::Kind::TrailingGarbage, "graph6: nonzero padding bits");
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.n();
  if (n > kMaxSmallOrder) throw TooLarge("graph6 writer supports n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + kBias));
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(group + kBias);
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((group << (6 - filled)) + kBias);
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_vertex = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    auto fail = [&] {
      throw ParseError(ParseError::Kind::EdgeList, "edge list line " + std::to_string(line_no) + ": '" + line + "'");
    };
    int u = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) fail();
    } catch (const std::logic_error&) {
      fail();
    }
    int v = 0;
    if (!(ls >> v)) {
      if (!ls.eof() || declared >= 0 || !edges.empty() || u < 0) fail();
      declared = u;
      continue;
    }
    std::string extra;
    if (ls >> extra || u < 0 || v < 0 || u == v) fail();
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  int n = declared >= 0 ? declared : max_vertex + 1;
  if (max_vertex >= n)
    throw ParseError(ParseError::Kind::EdgeList, "edge list: vertex " + std::to_string(max_vertex) +
                                                     " exceeds declared count " + std::to_string(n));
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace invdom
