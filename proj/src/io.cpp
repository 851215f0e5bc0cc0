#include "dpgh/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace dpgh {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (const auto hash = text.find('#'); hash != std::string::npos) {
      text.resize(hash);
    }
    std::istringstream fields(text);
    Line line{number, {}};
    for (std::string token; fields >> token;) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

template <class T>
T parse_number(const std::string& token, std::size_t line) {
  T value{};
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "not a number: '" + token + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw ParseError(line.number, fmt::format("'{}' line needs {} fields",
                                              line.tokens[0], arity - 1));
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : fmt::format("line {}: {}", line, message)),
      line_(line) {}

Graph read_graph(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "p") {
    throw ParseError(lines.empty() ? 0 : lines[0].number,
                     "expected 'p <n> <m>' header");
  }
  expect_arity(lines[0], 3);
  const auto n = parse_number<std::int64_t>(lines[0].tokens[1], lines[0].number);
  const auto m = parse_number<std::int64_t>(lines[0].tokens[2], lines[0].number);
  if (n < 0 || m < 0) throw ParseError(lines[0].number, "negative count");

  std::vector<WeightedEdge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "e") {
      throw ParseError(line.number, "unknown line type '" + line.tokens[0] + "'");
    }
    expect_arity(line, 4);
    const auto u = parse_number<std::int64_t>(line.tokens[1], line.number);
    const auto v = parse_number<std::int64_t>(line.tokens[2], line.number);
    const auto w = parse_number<double>(line.tokens[3], line.number);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line.number, "vertex out of range");
    }
    if (u == v) throw ValidationError(fmt::format("line {}: self-loop", line.number));
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ValidationError(
          fmt::format("line {}: edge weight must be positive", line.number));
    }
    edges.push_back({u, v, w});
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(lines[0].number,
                     fmt::format("header declares {} edges, found {}", m,
                                 edges.size()));
  }
  std::vector<VertexId> vertices(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
  return Graph(std::move(vertices), edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto& ids = g.vertices().ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] != static_cast<VertexId>(i)) {
      throw std::domain_error("edge-list format needs vertices 0..n-1");
    }
  }
  fmt::print(out, "p {} {}\n", g.num_vertices(), g.num_edges());
  for (const WeightedEdge& e : g.edges()) {
    fmt::print(out, "e {} {} {}\n", e.u, e.v, e.weight);
  }
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out = open_output(path);
  write_graph(out, g);
}

SteinerTree read_tree(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "t") {
    throw ParseError(lines.empty() ? 0 : lines[0].number, "expected 't <n>' header");
  }
  expect_arity(lines[0], 2);
  const auto n = parse_number<std::int64_t>(lines[0].tokens[1], lines[0].number);

  SteinerTree tree;
  std::vector<VertexId> terminals;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] == "b") {
      expect_arity(line, 3);
      const auto v = parse_number<std::int64_t>(line.tokens[1], line.number);
      const auto u = parse_number<std::int64_t>(line.tokens[2], line.number);
      if (!tree.assignment.emplace(v, u).second) {
        throw ParseError(line.number, "vertex assigned twice");
      }
      terminals.push_back(u);
    } else if (line.tokens[0] == "e") {
      expect_arity(line, 4);
      tree.edges.push_back({parse_number<std::int64_t>(line.tokens[1], line.number),
                            parse_number<std::int64_t>(line.tokens[2], line.number),
                            parse_number<double>(line.tokens[3], line.number)});
    } else {
      throw ParseError(line.number, "unknown line type '" + line.tokens[0] + "'");
    }
  }
  if (static_cast<std::int64_t>(tree.assignment.size()) != n) {
    throw ParseError(lines[0].number, "header vertex count does not match 'b' lines");
  }
  tree.terminals = VertexSet(std::move(terminals));
  std::vector<VertexId> vertices;
  for (const auto& [v, u] : tree.assignment) vertices.push_back(v);
  if (const std::string problem =
          steiner_tree_violation(tree, VertexSet(std::move(vertices)));
      !problem.empty()) {
    throw ValidationError("invalid tree: " + problem);
  }
  return tree;
}

SteinerTree load_tree(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_tree(in);
}

void write_tree(std::ostream& out, const SteinerTree& tree) {
  fmt::print(out, "t {}\n", tree.assignment.size());
  for (const auto& [v, u] : tree.assignment) fmt::print(out, "b {} {}\n", v, u);
  for (const TreeEdge& e : tree.edges) {
    fmt::print(out, "e {} {} {}\n", e.a, e.b, e.weight);
  }
}

void save_tree(const SteinerTree& tree, const std::string& path) {
  std::ofstream out = open_output(path);
  write_tree(out, tree);
}

}  // namespace dpgh
