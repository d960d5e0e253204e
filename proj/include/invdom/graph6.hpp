#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "invdom/errors.hpp"
#include "invdom/graph.hpp"

namespace invdom {

/// graph6 decoding failure. `kind` distinguishes the failure classes so
/// callers can report them without parsing the message.
class ParseError : public Error {
 public:
  enum class Kind {
    MalformedLength,  // size byte outside 63..125 (multi-byte sizes unsupported)
    TruncatedBody,    // fewer body bytes than n(n-1)/2 bits need
    NonAsciiByte,     // byte outside the graph6 alphabet 63..126
    TrailingGarbage,  // bytes after the body, or nonzero padding bits
    EdgeList,         // malformed edge-list text
  };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Decode one graph6 string. An optional ">>graph6<<" header and a single
/// trailing newline are accepted.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, n <= 62. Throws TooLarge otherwise.
std::string write_graph6(const Graph& g);

/// Edge-list text: one "u v" pair (0-based) per line. Blank lines and lines
/// starting with '#' are skipped. A line holding a single integer fixes the
/// vertex count, which otherwise is one more than the largest endpoint.
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace invdom
