#ifndef DPGH_EXACT_CUTS_HPP_
#define DPGH_EXACT_CUTS_HPP_

#include <map>

#include "dpgh/graph.hpp"
#include "dpgh/steiner_tree.hpp"

namespace dpgh {

// λ_G(s, t) together with the s-side of a minimum cut.
struct MaxFlowResult {
  CutSide cut;
  double value = 0.0;
};

// Exact minimum s-t cut. The side is the set of vertices reachable from s in
// the final residual network, i.e. the inclusion-minimal minimum cut side.
// Throws std::domain_error if s == t or either is not a vertex.
MaxFlowResult min_st_cut_exact(const Graph& g, VertexId s, VertexId t);

// Exact minimum cut separating the disjoint sets S and T; the side contains S
// and avoids T. Throws std::domain_error on empty or overlapping sets.
MaxFlowResult min_ST_cut_exact(const Graph& g, const VertexSet& s,
                               const VertexSet& t);

// Minimum isolating cuts for terminals R (|R| ≥ 2) via lg|R| rounds of
// bit-partition cuts followed by one cut per terminal inside its region.
// Returned sides are pairwise disjoint and hold exactly one terminal each.
std::map<VertexId, CutSide> isolating_cuts_exact(const Graph& g,
                                                 const VertexSet& terminals);

// Cut tree built with the Gomory-Hu contraction scheme; terminals = V(G),
// f = identity. Disconnected graphs produce zero-weight tree edges.
SteinerTree gomory_hu_exact(const Graph& g);

// Enumerates every side containing s (|V| ≤ 20, else std::domain_error).
// Ties go to the lexicographically smallest side.
MaxFlowResult brute_force_min_cut(const Graph& g, VertexId s, VertexId t);

}  // namespace dpgh

#endif  // DPGH_EXACT_CUTS_HPP_
