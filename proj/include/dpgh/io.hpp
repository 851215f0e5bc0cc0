#ifndef DPGH_IO_HPP_
#define DPGH_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dpgh/graph.hpp"
#include "dpgh/steiner_tree.hpp"

namespace dpgh {

// Malformed input; line() is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input describing an invalid object (e.g. a nonpositive weight).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list format:
//   # comment
//   p <n> <m>
//   e <u> <v> <w>     (m lines, 0-based vertices, w > 0; duplicates summed)
Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path);
// Vertices must be exactly 0..n-1.
void write_graph(std::ostream& out, const Graph& g);
void save_graph(const Graph& g, const std::string& path);

// Tree format:
//   t <n>
//   b <vertex> <terminal>   (n lines, the assignment f)
//   e <u> <v> <w>           (tree edges)
// Terminals are the values of f.
SteinerTree read_tree(std::istream& in);
SteinerTree load_tree(const std::string& path);
void write_tree(std::ostream& out, const SteinerTree& tree);
void save_tree(const SteinerTree& tree, const std::string& path);

}  // namespace dpgh

#endif  // DPGH_IO_HPP_
