#ifndef DPGH_GH_PRIVATE_HPP_
#define DPGH_GH_PRIVATE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "dpgh/dp_mech.hpp"
#include "dpgh/graph.hpp"
#include "dpgh/steiner_tree.hpp"

namespace dpgh {

// Unspecified "sufficiently large" constants of the private pipeline.
struct PipelineConstants {
  double c1 = 4.0;             // isolating-cut error allowance
  double c2 = 4.0;             // cut-value error allowance
  double c_depth = 4.0;        // recursion depth budget multiplier
  double penalty_const = 4.0;  // isolating-cut penalty multiplier
};

struct StepParams {
  Epsilon eps;
  double beta;
  PipelineConstants constants;

  // C1·(n + lg(1/β))·lg³|U| / ε, 0 in noiseless mode.
  double err_iso(std::size_t n, std::size_t num_terminals) const;
  // C2·|U|·lg(|U|/β) / ε, 0 in noiseless mode.
  double err_values(std::size_t num_terminals) const;
};

struct StepOutput {
  VertexSet covered;                  // D = ∪ (Ŝ_v ∩ U)
  VertexSet selected;                 // terminals v whose Ŝ_v was accepted
  std::map<VertexId, CutSide> sets;   // Ŝ_v with value w_G(Ŝ_v)
  int chosen_level = -1;              // -1 when nothing was accepted
  int levels_run = 0;                 // levels with |R^i| ≥ 2
};

// One private decomposition step from source s over terminals U.
//
// Noisy single-source cut values λ̂(s, v) are compared against noisy
// isolating-cut values on geometrically subsampled terminal sets R^i
// (R^0 = U, then rate 2^-i, s always kept); an isolating cut Ŝ_v is
// accepted at level i when
//   ŵ(Ŝ_v) ≤ λ̂(s, v) + (2(⌊lg|U|⌋ − i) + 1)·err_iso + err_values
// and |Ŝ_v ∩ U| ≤ 0.9|U|. The level covering the most terminals wins, the
// smallest level on ties. Charges exactly ε to `ledger` when every level
// runs.
StepOutput gh_tree_step(const Graph& g, VertexId s, const VertexSet& terminals,
                        const StepParams& params, Rng& rng,
                        PrivacyLedger* ledger = nullptr);

struct RecursionParams {
  Epsilon eps;
  int depth = 0;
  std::size_t n_max = 0;
  PipelineConstants constants;

  // ⌈C_depth·lg² n_max⌉, at least 1.
  int t_max() const;
};

// Thrown when the recursion would reach depth t_max.
class RecursionAborted : public std::runtime_error {
 public:
  RecursionAborted(int depth, std::uint64_t seed);
  int depth() const { return depth_; }
  std::uint64_t seed() const { return seed_; }

 private:
  int depth_;
  std::uint64_t seed_;
};

struct StepRecord {
  int depth;
  std::size_t graph_size;
  VertexId source;
  VertexSet terminals;
  StepOutput output;
};
using StepObserver = std::function<void(const StepRecord&)>;

struct GhTreeResult {
  SteinerTree tree;
  // Charges along the most expensive composition path of the recursion.
  PrivacyLedger ledger;
  int max_depth = 0;
};

// Recursive approximate Steiner cut tree over terminals U ⊆ V(G).
GhTreeResult gh_tree(const Graph& g, const VertexSet& terminals,
                     const RecursionParams& params, Rng& rng,
                     const StepObserver* observer = nullptr);

// One recursive child of a gh_tree call: the tree for G_v, the accepted side
// Ŝ_v, the label x_v of V \ Ŝ_v inside G_v, the label y_v of Ŝ_v inside
// G_large, and w(Ŝ_v).
struct CombinePiece {
  SteinerTree tree;
  VertexSet side;
  VertexId inner_label;
  VertexId outer_label;
  double weight;
};

// Disjoint union of the trees plus one edge (f_v(x_v), f_large(y_v)) of
// weight w(Ŝ_v) per piece; f is taken from the piece owning each vertex.
SteinerTree combine_steiner(const SteinerTree& large,
                            const std::vector<CombinePiece>& pieces);

struct FinalResult {
  SteinerTree tree;
  PrivacyLedger ledger;
  int max_depth = 0;
  int t_max = 0;
};

// ε-DP approximate cut tree on V(G): gh_tree at ε/2, then Lap(2(n−1)/ε) on
// every tree edge weight, clamped at 0. Throws RecursionAborted (carrying
// rng's seed) if the depth guard trips.
FinalResult final_gh_tree(const Graph& g, Epsilon eps, Rng& rng,
                          const PipelineConstants& constants = {},
                          const StepObserver* observer = nullptr);

}  // namespace dpgh

#endif  // DPGH_GH_PRIVATE_HPP_
