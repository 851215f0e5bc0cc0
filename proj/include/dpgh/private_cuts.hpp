#ifndef DPGH_PRIVATE_CUTS_HPP_
#define DPGH_PRIVATE_CUTS_HPP_

#include <map>

#include "dpgh/dp_mech.hpp"
#include "dpgh/graph.hpp"

namespace dpgh {

// ε-DP minimum s-t cut: every v ∉ {s, t} gets an extra edge to s and one to
// t, each weighted Exp(mean 1/ε) on top of any existing weight, and the exact
// minimum cut of that graph is released. The reported value is the true
// w_G of the side. Charges one exponential-mechanism entry to `ledger`.
CutSide private_min_st_cut(const Graph& g, VertexId s, VertexId t, Epsilon eps,
                           Rng& rng, PrivacyLedger* ledger = nullptr);

// ε-DP minimum S-T cut: S and T are contracted onto their smallest members
// and private_min_st_cut runs on the result. Singletons reduce exactly to
// private_min_st_cut with the same draws.
CutSide private_min_ST_cut(const Graph& g, const VertexSet& s,
                           const VertexSet& t, Epsilon eps, Rng& rng,
                           PrivacyLedger* ledger = nullptr);

struct IsoCutParams {
  Epsilon eps;
  double beta;               // failure probability, in (0, 1)
  VertexSet penalized;       // vertices pushed away from terminal sides
  double penalty_const = 4;  // multiplier of the penalty weight

  // penalty_const·(n + lg(1/β))·lg²(|R|) / (ε·|U|); 0 when U is empty or in
  // noiseless mode.
  double penalty_weight(std::size_t n, std::size_t num_terminals) const;
};

struct IsoCutsResult {
  std::map<VertexId, CutSide> cuts;
  double total_value = 0.0;
};

// ε-DP approximate minimum isolating cuts. ⌊lg(|R|-1)⌋ + 2 private S-T cut
// calls, each at ε/(lg|R| + 2). Throws std::domain_error if |R| < 2.
IsoCutsResult private_isolating_cuts(const Graph& g, const VertexSet& terminals,
                                     const IsoCutParams& params, Rng& rng,
                                     PrivacyLedger* ledger = nullptr);

}  // namespace dpgh

#endif  // DPGH_PRIVATE_CUTS_HPP_
