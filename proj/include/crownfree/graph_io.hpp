#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "crownfree/hypergraph.hpp"

namespace crownfree {

/// Malformed graph text. `line` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// L3G text: optional `#` comment lines, a header `n m`, then m lines `a b c`
/// with a < b < c < n in strictly increasing lexicographic order. LF only.
LinearThreeGraph parse_l3g(std::string_view text);
std::string to_l3g(const LinearThreeGraph& h);

/// JSON: {"n": int, "edges": [[a,b,c], ...]} with ascending triples in
/// lexicographic order.
LinearThreeGraph parse_graph_json(std::string_view text);
std::string to_graph_json(const LinearThreeGraph& h);

/// Dispatches on the first non-blank character: `{` means JSON, else L3G.
LinearThreeGraph parse_graph(std::string_view text);
LinearThreeGraph read_graph_file(const std::string& path);

}  // namespace crownfree
