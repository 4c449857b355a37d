#include "crownfree/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "crownfree/serialize.hpp"

namespace crownfree {

namespace {

// Splits a line into non-negative integers separated by single spaces.
std::vector<long long> numbers(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      if (i == 0 || line[i - 1] == ' ' || i + 1 == line.size()) throw ParseError(lineno, "unexpected whitespace");
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i) {
      throw ParseError(lineno, "expected a non-negative integer, got '" + std::string(line.substr(i, 12)) + "'");
    }
    if (value < 0 || line[i] == '+' || line[i] == '-') throw ParseError(lineno, "negative number");
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ') throw ParseError(lineno, "unexpected character after number");
    out.push_back(value);
  }
  return out;
}

}  // namespace

LinearThreeGraph parse_l3g(std::string_view text) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Triple> edges;
  std::vector<std::size_t> edge_line;

  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;

    if (line.find('\r') != std::string_view::npos) throw ParseError(lineno, "CR character (LF line endings required)");
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) throw ParseError(lineno, "empty line");

    const std::vector<long long> v = numbers(line, lineno);
    if (!have_header) {
      if (v.size() != 2) throw ParseError(lineno, "header must be 'n m'");
      n = v[0];
      m = v[1];
      if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
      if (n > 1'000'000) throw ParseError(lineno, "vertex count too large");
      if (m > n * (n - 1) / 6) throw ParseError(lineno, "edge count exceeds n(n-1)/6");
      have_header = true;
      continue;
    }
    if (v.size() != 3) throw ParseError(lineno, "edge line must be 'a b c'");
    if (static_cast<long long>(edges.size()) >= m) throw ParseError(lineno, "more edge lines than declared");
    if (!(v[0] < v[1] && v[1] < v[2])) throw ParseError(lineno, "edge vertices must be strictly increasing");
    if (v[2] >= n) throw ParseError(lineno, "vertex " + std::to_string(v[2]) + " out of range");
    Triple t{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
    if (!edges.empty() && !(edges.back() < t)) throw ParseError(lineno, "edges must be in strictly increasing order");
    edges.push_back(t);
    edge_line.push_back(lineno);
  }
  if (!have_header) throw ParseError(lineno, "missing header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  auto result = validate_linear(edges, static_cast<int>(n));
  if (auto* bad = std::get_if<LinearityViolation>(&result)) {
    throw ParseError(edge_line[bad->second.value_or(bad->first)], "not linear: " + bad->message);
  }
  return std::get<LinearThreeGraph>(std::move(result));
}

std::string to_l3g(const LinearThreeGraph& h) {
  std::ostringstream os;
  os << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const Triple& t : h.edges()) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return os.str();
}

LinearThreeGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string to_graph_json(const LinearThreeGraph& h) { return graph_to_json(h).dump(); }

LinearThreeGraph parse_graph(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_l3g(text);
}

LinearThreeGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace crownfree
