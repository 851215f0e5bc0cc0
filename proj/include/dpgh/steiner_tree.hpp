#ifndef DPGH_STEINER_TREE_HPP_
#define DPGH_STEINER_TREE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dpgh/graph.hpp"

namespace dpgh {

struct TreeEdge {
  VertexId a;
  VertexId b;
  double weight;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

// Weighted tree on a terminal set U plus an assignment f: V → U with
// f restricted to U the identity. With U = V and f the identity this is an
// ordinary cut tree.
struct SteinerTree {
  VertexSet terminals;
  std::vector<TreeEdge> edges;
  std::map<VertexId, VertexId> assignment;

  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
};

// Single-terminal tree with every vertex of `vertices` assigned to it.
SteinerTree single_node_tree(VertexId terminal, const VertexSet& vertices);

// Indices into tree.edges along the unique u-v path, in order from u.
// Throws std::domain_error if u or v is not a terminal or they are not
// connected.
std::vector<std::size_t> tree_path(const SteinerTree& tree, VertexId u,
                                   VertexId v);

// Terminals in the component of `anchor` once edge `removed` is deleted.
VertexSet tree_component(const SteinerTree& tree, std::size_t removed,
                         VertexId anchor);

// f⁻¹(terminal_subset).
VertexSet assignment_preimage(const SteinerTree& tree,
                              const VertexSet& terminal_subset);

// Empty when `tree` is a well-formed Steiner tree for vertex set
// `vertices`: spanning tree on its terminals, f total on `vertices` with
// values in U, f|U the identity, nonnegative weights. Otherwise a
// description of the first violation.
std::string steiner_tree_violation(const SteinerTree& tree,
                                   const VertexSet& vertices);

}  // namespace dpgh

#endif  // DPGH_STEINER_TREE_HPP_
