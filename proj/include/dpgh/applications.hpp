#ifndef DPGH_APPLICATIONS_HPP_
#define DPGH_APPLICATIONS_HPP_

#include <cstddef>
#include <vector>

#include "dpgh/graph.hpp"
#include "dpgh/steiner_tree.hpp"

namespace dpgh {

// Answer read off a cut tree. `tree_value` is the tree's (possibly noisy)
// edge weight and is the released answer. `cut.value` is the exact weight of
// the side in G: a diagnostic that is NOT private.
struct TreeQueryResult {
  double tree_value = 0.0;
  CutSide cut;
};

// Minimum-weight edge on the u-v tree path (the one nearest u on ties) and
// the side f⁻¹(component of u). Throws std::domain_error unless u != v are
// both terminals.
TreeQueryResult tree_query(const SteinerTree& tree, const Graph& g, VertexId u,
                           VertexId v);

struct PairEdge {
  VertexId u;
  VertexId v;
  std::size_t edge;  // index of the minimum edge on the u-v tree path
};

// For every terminal pair u < v, the edge tree_query(tree, g, u, v) would
// pick. One traversal per terminal.
std::vector<PairEdge> path_minimum_edges(const SteinerTree& tree);

// w_G of the cut induced by each tree edge, indexed like tree.edges.
std::vector<double> tree_edge_cut_weights(const SteinerTree& tree, const Graph& g);

// Lightest tree edge and its induced cut. Needs at least two terminals.
TreeQueryResult global_min_cut(const SteinerTree& tree, const Graph& g);

struct KCutSolution {
  std::vector<VertexSet> partition;  // ordered by smallest member
  double value = 0.0;
};

// Total weight of edges whose endpoints lie in different parts.
double partition_weight(const Graph& g, const std::vector<VertexSet>& parts);

// Cuts the union of the cuts induced by the k−1 lightest tree edges. If G
// falls apart into more than k pieces, removed edges are added back,
// heaviest first, until exactly k remain. Requires 2 ≤ k ≤ |U|.
KCutSolution min_k_cut(const SteinerTree& tree, const Graph& g, std::size_t k);

}  // namespace dpgh

#endif  // DPGH_APPLICATIONS_HPP_
