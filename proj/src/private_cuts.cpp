#include "dpgh/private_cuts.hpp"

#include <cmath>
#include <stdexcept>

#include "dpgh/exact_cuts.hpp"
#include "isolating_cuts_impl.hpp"

namespace dpgh {

CutSide private_min_st_cut(const Graph& g, VertexId s, VertexId t, Epsilon eps,
                           Rng& rng, PrivacyLedger* ledger) {
  if (s == t) throw std::domain_error("private min s-t cut needs s != t");
  g.index_of(s);
  g.index_of(t);
  const NoiseScale mean = NoiseScale::calibrated(1.0, eps);

  GraphBuilder noisy;
  for (VertexId v : g.vertices()) noisy.add_vertex(v);
  for (const WeightedEdge& e : g.edges()) noisy.add_edge(e.u, e.v, e.weight);
  if (!mean.is_noiseless()) {
    for (VertexId v : g.vertices()) {
      if (v == s || v == t) continue;
      noisy.add_edge(v, s, sample_exponential(mean, rng));
      noisy.add_edge(v, t, sample_exponential(mean, rng));
    }
  }
  if (ledger != nullptr) ledger->charge("exp-st-cut", 1.0, mean);

  const MaxFlowResult inner = min_st_cut_exact(std::move(noisy).build(), s, t);
  return make_cut_side(g, inner.cut.side);
}

CutSide private_min_ST_cut(const Graph& g, const VertexSet& s,
                           const VertexSet& t, Epsilon eps, Rng& rng,
                           PrivacyLedger* ledger) {
  if (s.empty() || t.empty()) throw std::domain_error("S and T must be nonempty");
  if (!s.disjoint_from(t)) throw std::domain_error("S and T must be disjoint");
  if (!s.subset_of(g.vertices()) || !t.subset_of(g.vertices())) {
    throw std::domain_error("S or T is not a subset of V(G)");
  }
  const Contraction c = contract_sets(g, {{s, s.front()}, {t, t.front()}});
  const CutSide inner =
      private_min_st_cut(c.graph, s.front(), t.front(), eps, rng, ledger);
  return make_cut_side(g, c.map.expand(inner.side));
}

double IsoCutParams::penalty_weight(std::size_t n,
                                    std::size_t num_terminals) const {
  if (penalized.empty() || eps.is_infinite()) return 0.0;
  const double lg_r = std::log2(static_cast<double>(num_terminals));
  return penalty_const * (static_cast<double>(n) + std::log2(1.0 / beta)) *
         lg_r * lg_r /
         (eps.value() * static_cast<double>(penalized.size()));
}

IsoCutsResult private_isolating_cuts(const Graph& g, const VertexSet& terminals,
                                     const IsoCutParams& params, Rng& rng,
                                     PrivacyLedger* ledger) {
  if (!(params.beta > 0.0 && params.beta < 1.0)) {
    throw std::domain_error("beta must lie in (0, 1)");
  }
  if (terminals.size() < 2) {
    throw std::domain_error("isolating cuts need at least two terminals");
  }
  const Epsilon per_call =
      params.eps /
      (std::log2(static_cast<double>(terminals.size())) + 2.0);
  const double penalty =
      params.penalty_weight(g.num_vertices(), terminals.size());

  IsoCutsResult result;
  result.cuts = detail::isolating_cuts_skeleton(
      g, terminals, params.penalized, penalty,
      [&](const Graph& h, const VertexSet& s, const VertexSet& t) {
        return private_min_ST_cut(h, s, t, per_call, rng, ledger).side;
      });
  for (const auto& [v, cut] : result.cuts) result.total_value += cut.value;
  return result;
}

}  // namespace dpgh
