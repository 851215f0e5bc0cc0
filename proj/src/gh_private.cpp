#include "dpgh/gh_private.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dpgh/exact_cuts.hpp"
#include "dpgh/private_cuts.hpp"
#include "isolating_cuts_impl.hpp"

namespace dpgh {
namespace {

double lg(double x) { return std::log2(x); }

// Adds Lap(scale) to the weight between `hub` and every other vertex,
// creating pairs that were absent and truncating at 0.
Graph mask_hub_edges(const Graph& g, VertexId hub, NoiseScale scale, Rng& rng) {
  GraphBuilder builder;
  for (VertexId v : g.vertices()) builder.add_vertex(v);
  for (const WeightedEdge& e : g.edges()) {
    if (e.u != hub && e.v != hub) builder.add_edge(e.u, e.v, e.weight);
  }
  for (VertexId v : g.vertices()) {
    if (v == hub) continue;
    const double noisy = g.weight(hub, v) + sample_laplace(scale, rng);
    builder.add_edge(hub, v, std::max(0.0, noisy));
  }
  return std::move(builder).build();
}

}  // namespace

double StepParams::err_iso(std::size_t n, std::size_t num_terminals) const {
  const double lg_u = lg(static_cast<double>(num_terminals));
  return constants.c1 * (static_cast<double>(n) + lg(1.0 / beta)) * lg_u *
         lg_u * lg_u * eps.inverse();
}

double StepParams::err_values(std::size_t num_terminals) const {
  const double u = static_cast<double>(num_terminals);
  return constants.c2 * u * lg(u / beta) * eps.inverse();
}

StepOutput gh_tree_step(const Graph& g, VertexId s, const VertexSet& terminals,
                        const StepParams& params, Rng& rng,
                        PrivacyLedger* ledger) {
  if (terminals.size() < 2) {
    throw std::domain_error("gh_tree_step needs at least two terminals");
  }
  if (!terminals.contains(s)) throw std::domain_error("source must be a terminal");
  if (!terminals.subset_of(g.vertices())) {
    throw std::domain_error("terminal outside the graph");
  }
  if (!(params.beta > 0.0 && params.beta < 1.0)) {
    throw std::domain_error("beta must lie in (0, 1)");
  }

  const std::size_t u_size = terminals.size();
  const int top = detail::floor_log2(u_size);
  const int levels = top + 1;
  const double err_iso = params.err_iso(g.num_vertices(), u_size);
  const double err_values = params.err_values(u_size);

  const NoiseScale value_noise = NoiseScale::calibrated(
      4.0 * static_cast<double>(u_size - 1), params.eps);
  std::map<VertexId, double> lambda_hat;
  for (VertexId v : terminals) {
    if (v == s) continue;
    lambda_hat[v] =
        min_st_cut_exact(g, s, v).value + sample_laplace(value_noise, rng);
  }
  if (ledger != nullptr) {
    ledger->charge("single-source-values", 1.0, value_noise, u_size - 1);
  }

  const Epsilon iso_eps = params.eps / (2.0 * levels);
  const NoiseScale iso_value_noise =
      NoiseScale::calibrated(8.0 * levels, params.eps);
  const IsoCutParams iso_params{iso_eps, params.beta / levels, terminals,
                                params.constants.penalty_const};

  StepOutput best;
  VertexSet sample = terminals;
  for (int i = 0; i < levels; ++i) {
    if (i > 0) {
      std::vector<VertexId> picked;
      const double rate = std::ldexp(1.0, -i);
      for (VertexId u : terminals) {
        if (u == s || rng.bernoulli(rate)) picked.push_back(u);
      }
      sample = VertexSet(std::move(picked));
    }
    if (sample.size() < 2) continue;
    ++best.levels_run;

    PrivacyLedger iso_ledger(iso_eps);
    const IsoCutsResult iso =
        private_isolating_cuts(g, sample, iso_params, rng, &iso_ledger);
    if (!iso_ledger.within_budget()) {
      throw std::logic_error("isolating cuts overspent their budget");
    }
    if (ledger != nullptr) {
      ledger->charge("isolating-cuts", 1.0, NoiseScale::calibrated(1.0, iso_eps));
      ledger->charge("isolating-cut-values", 2.0, iso_value_noise);
    }

    const double slack = (2.0 * (top - i) + 1.0) * err_iso + err_values;
    std::vector<VertexId> covered;
    std::vector<VertexId> selected;
    std::map<VertexId, CutSide> sets;
    for (VertexId v : sample) {
      if (v == s) continue;
      const CutSide& cut = iso.cuts.at(v);
      const double noisy_value = cut.value + sample_laplace(iso_value_noise, rng);
      const VertexSet inside = cut.side.intersected(terminals);
      if (noisy_value <= lambda_hat.at(v) + slack &&
          10 * inside.size() <= 9 * u_size) {
        covered.insert(covered.end(), inside.begin(), inside.end());
        selected.push_back(v);
        sets.emplace(v, cut);
      }
    }
    VertexSet level_cover(std::move(covered));
    if (best.chosen_level < 0 ? !level_cover.empty()
                              : level_cover.size() > best.covered.size()) {
      best.covered = std::move(level_cover);
      best.selected = VertexSet(std::move(selected));
      best.sets = std::move(sets);
      best.chosen_level = i;
    }
  }
  return best;
}

int RecursionParams::t_max() const {
  const double l = lg(static_cast<double>(std::max<std::size_t>(n_max, 2)));
  return std::max(1, static_cast<int>(std::ceil(constants.c_depth * l * l)));
}

RecursionAborted::RecursionAborted(int depth, std::uint64_t seed)
    : std::runtime_error("recursion depth limit reached at depth " +
                         std::to_string(depth) + " (seed " +
                         std::to_string(seed) + ")"),
      depth_(depth),
      seed_(seed) {}

SteinerTree combine_steiner(const SteinerTree& large,
                            const std::vector<CombinePiece>& pieces) {
  SteinerTree out;
  std::vector<VertexId> terminals(large.terminals.begin(), large.terminals.end());
  out.edges = large.edges;
  std::vector<VertexId> outer_labels;
  for (const CombinePiece& piece : pieces) outer_labels.push_back(piece.outer_label);
  const VertexSet outer(std::move(outer_labels));
  for (const auto& [v, u] : large.assignment) {
    if (!outer.contains(v)) out.assignment[v] = u;
  }
  for (const CombinePiece& piece : pieces) {
    terminals.insert(terminals.end(), piece.tree.terminals.begin(),
                     piece.tree.terminals.end());
    out.edges.insert(out.edges.end(), piece.tree.edges.begin(),
                     piece.tree.edges.end());
    out.edges.push_back({piece.tree.assignment.at(piece.inner_label),
                         large.assignment.at(piece.outer_label), piece.weight});
    for (VertexId v : piece.side) out.assignment[v] = piece.tree.assignment.at(v);
  }
  out.terminals = VertexSet(std::move(terminals));
  return out;
}

GhTreeResult gh_tree(const Graph& g, const VertexSet& terminals,
                     const RecursionParams& params, Rng& rng,
                     const StepObserver* observer) {
  if (terminals.empty() || !terminals.subset_of(g.vertices())) {
    throw std::domain_error("terminals must be a nonempty subset of V(G)");
  }
  const int t_max = params.t_max();
  if (params.depth >= t_max) throw RecursionAborted(params.depth, rng.seed());
  if (terminals.size() == 1) {
    return GhTreeResult{single_node_tree(terminals.front(), g.vertices()),
                        PrivacyLedger(params.eps), params.depth};
  }

  const VertexId s =
      terminals.ids()[rng.uniform_index(terminals.size())];
  const double n_max = static_cast<double>(params.n_max);
  const StepParams step_params{params.eps / (4.0 * t_max),
                               1.0 / (n_max * n_max * n_max), params.constants};
  PrivacyLedger ledger(params.eps);
  const StepOutput step = gh_tree_step(g, s, terminals, step_params, rng, &ledger);
  if (observer != nullptr && *observer) {
    (*observer)(StepRecord{params.depth, g.num_vertices(), s, terminals, step});
  }

  RecursionParams child_params = params;
  child_params.depth = params.depth + 1;
  const NoiseScale hub_noise =
      NoiseScale::calibrated(8.0 * t_max, params.eps);

  int max_depth = params.depth;
  const VertexId inner_label = g.fresh_label();
  VertexId outer_label = inner_label + 1;
  std::vector<CombinePiece> pieces;
  std::vector<std::pair<VertexSet, VertexId>> outer_groups;
  PrivacyLedger heaviest_inner(params.eps);
  std::size_t masked = 0;

  for (VertexId v : step.selected) {
    const CutSide& cut = step.sets.at(v);
    const VertexSet sub_terminals = cut.side.intersected(terminals);
    Contraction c = contract(g, g.vertices().minus(cut.side), inner_label);
    SteinerTree sub_tree;
    if (sub_terminals.size() > 1) {
      const Graph masked_graph =
          hub_noise.is_noiseless()
              ? std::move(c.graph)
              : mask_hub_edges(c.graph, inner_label, hub_noise, rng);
      ++masked;
      Rng child_rng = rng.child("v" + std::to_string(v));
      GhTreeResult sub =
          gh_tree(masked_graph, sub_terminals, child_params, child_rng, observer);
      max_depth = std::max(max_depth, sub.max_depth);
      if (sub.ledger.total() > heaviest_inner.total()) {
        heaviest_inner = std::move(sub.ledger);
      }
      sub_tree = std::move(sub.tree);
    } else {
      sub_tree = single_node_tree(v, c.graph.vertices());
    }
    pieces.push_back(
        CombinePiece{std::move(sub_tree), cut.side, inner_label, outer_label, cut.value});
    outer_groups.emplace_back(cut.side, outer_label);
    ++outer_label;
  }

  const Graph large_graph = contract_sets(g, std::move(outer_groups)).graph;
  const VertexSet large_terminals = terminals.minus(step.covered);
  GhTreeResult large;
  if (large_terminals.size() > 1) {
    Rng child_rng = rng.child("large");
    large = gh_tree(large_graph, large_terminals, child_params, child_rng, observer);
    max_depth = std::max(max_depth, large.max_depth);
  } else {
    large = GhTreeResult{single_node_tree(large_terminals.front(),
                                          large_graph.vertices()),
                         PrivacyLedger(params.eps), params.depth};
  }

  // A changed edge either stays inside one Ŝ_v (only G_v sees it), or its
  // endpoints end up in different pieces: then at most two masked hubs and
  // G_large see it.
  PrivacyLedger split_path(params.eps);
  for (std::size_t k = 0; k < std::min<std::size_t>(masked, 2); ++k) {
    split_path.charge("masked-contraction-edges", 1.0, hub_noise);
  }
  split_path.append(large.ledger);
  ledger.append(heaviest_inner.total() > split_path.total() ? heaviest_inner
                                                            : split_path);

  return GhTreeResult{combine_steiner(large.tree, pieces), std::move(ledger),
                      max_depth};
}

FinalResult final_gh_tree(const Graph& g, Epsilon eps, Rng& rng,
                          const PipelineConstants& constants,
                          const StepObserver* observer) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw std::domain_error("final_gh_tree needs at least two vertices");
  const RecursionParams params{eps / 2.0, 0, n, constants};
  GhTreeResult inner;
  try {
    inner = gh_tree(g, g.vertices(), params, rng, observer);
  } catch (const RecursionAborted& aborted) {
    throw RecursionAborted(aborted.depth(), rng.seed());
  }

  FinalResult out{std::move(inner.tree), PrivacyLedger(eps), inner.max_depth,
                  params.t_max()};
  out.ledger.append(inner.ledger);
  const NoiseScale weight_noise =
      NoiseScale::calibrated(2.0 * static_cast<double>(n - 1), eps);
  for (TreeEdge& e : out.tree.edges) {
    e.weight = std::max(0.0, e.weight + sample_laplace(weight_noise, rng));
  }
  out.ledger.charge("tree-edge-weights", 1.0, weight_noise, n - 1);
  return out;
}

}  // namespace dpgh
