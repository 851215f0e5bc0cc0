// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "dpgh/applications.hpp"
#include "dpgh/exact_cuts.hpp"
#include "dpgh/experiment.hpp"
#include "dpgh/generators.hpp"
#include "dpgh/gh_private.hpp"
#include "dpgh/private_cuts.hpp"
#include "oracles.hpp"

using namespace dpgh;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VertexSet random_subset(const Graph& g, Rng& rng, double p, std::size_t at_least) {
  std::vector<VertexId> picked;
  for (VertexId v : g.vertices()) {
    if (rng.bernoulli(p)) picked.push_back(v);
  }
  for (VertexId v : g.vertices()) {
    if (picked.size() >= at_least) break;
    if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
  }
  return VertexSet(std::move(picked));
}

std::vector<std::vector<double>> exact_lambda(const Graph& g) {
  const SteinerTree exact = gomory_hu_exact(g);
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<double>> lambda(n, std::vector<double>(n, 0.0));
  for (const PairEdge& p : path_minimum_edges(exact)) {
    const double w = exact.edges[p.edge].weight;
    lambda[g.index_of(p.u)][g.index_of(p.v)] = w;
    lambda[g.index_of(p.v)][g.index_of(p.u)] = w;
  }
  return lambda;
}

Outcome exact_oracle_suite() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  Rng picker(1);
  int graphs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 11);
    const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (trial % 5), 9, 10000 + trial);
    const oracle::CutTable table(g);
    ++graphs;

    for (VertexId s : g.vertices()) {
      for (VertexId t : g.vertices()) {
        if (s >= t) continue;
        const MaxFlowResult flow = min_st_cut_exact(g, s, t);
        const double brute = table.lambda(s, t);
        out.require(std::abs(flow.value - brute) <= kTol,
                    fmt::format("min_st_cut graph {} pair {}-{}", trial, s, t));
        out.require(flow.cut.side.contains(s) && !flow.cut.side.contains(t) &&
                        std::abs(table.weight(flow.cut.side) - brute) <= kTol,
                    fmt::format("min_st_cut side graph {} pair {}-{}", trial, s, t));
      }
    }

    if (n >= 2) {
      const VertexSet terminals = random_subset(g, picker, 0.4, 2);
      const auto cuts = isolating_cuts_exact(g, terminals);
      VertexSet seen;
      for (const auto& [r, cut] : cuts) {
        const double best = table.min_separating({r}, terminals.minus({r}));
        out.require(std::abs(cut.value - best) <= kTol &&
                        std::abs(table.weight(cut.side) - best) <= kTol,
                    fmt::format("isolating cut graph {} terminal {}", trial, r));
        out.require(cut.side.intersected(terminals) == VertexSet{r} &&
                        cut.side.disjoint_from(seen),
                    fmt::format("isolating cut structure graph {}", trial));
        seen = seen.united(cut.side);
      }
    }

    const SteinerTree tree = gomory_hu_exact(g);
    out.require(steiner_tree_violation(tree, g.vertices()).empty(),
                fmt::format("gomory-hu tree shape graph {}", trial));
    for (const PairEdge& p : path_minimum_edges(tree)) {
      const double brute = table.lambda(p.u, p.v);
      const TreeQueryResult q = tree_query(tree, g, p.u, p.v);
      out.require(std::abs(tree.edges[p.edge].weight - brute) <= kTol &&
                      std::abs(table.weight(q.cut.side) - brute) <= kTol,
                  fmt::format("gomory-hu graph {} pair {}-{}", trial, p.u, p.v));
    }
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < 120.0, "runtime over 2 minutes");
  if (out.pass) out.detail = fmt::format("{} graphs, n<=12, {:.2f}s", graphs, elapsed);
  return out;
}

void compare_noiseless(const Graph& g, std::uint64_t seed, const std::string& label,
                       Outcome& out) {
  Rng rng(seed);
  const SteinerTree tree = final_gh_tree(g, Epsilon::infinite(), rng).tree;
  const SteinerTree exact = gomory_hu_exact(g);
  const auto mine = path_minimum_edges(tree);
  const auto truth = path_minimum_edges(exact);
  const auto weights = tree_edge_cut_weights(tree, g);
  for (std::size_t i = 0; i < mine.size(); ++i) {
    const double lambda = exact.edges[truth[i].edge].weight;
    out.require(std::abs(tree.edges[mine[i].edge].weight - lambda) <= kTol &&
                    std::abs(weights[mine[i].edge] - lambda) <= kTol,
                fmt::format("{} pair {}-{}", label, mine[i].u, mine[i].v));
  }
}

Outcome noiseless_equivalence() {
  Outcome out;
  int instances = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 11, 0.35 + 0.1 * (trial % 4), 9,
                                         20000 + trial);
    compare_noiseless(g, trial, fmt::format("random graph {}", trial), out);
    ++instances;
  }
  for (std::size_t k = 2; k <= 6; ++k) {
    compare_noiseless(dumbbell(k, 10, 1), k, fmt::format("dumbbell {}", k), out);
    ++instances;
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    compare_noiseless(cycle_graph(n), n, fmt::format("cycle {}", n), out);
    ++instances;
  }
  if (out.pass) out.detail = fmt::format("{} instances, all pairs identical", instances);
  return out;
}

Outcome privacy_ledger() {
  Outcome out;
  const double eps_values[] = {0.1, 0.5, 1.0, 2.0, 4.0};
  double worst_ratio = 0.0;
  for (int run = 0; run < 100; ++run) {
    const Graph g = oracle::random_graph(10 + run % 21, 0.3, 9, 30000 + run);
    const Epsilon eps(eps_values[run % 5]);
    Rng rng(run);
    const FinalResult r = final_gh_tree(g, eps, rng);
    out.require(r.ledger.within_budget() && r.ledger.total() <= eps.value() * (1 + 1e-12),
                fmt::format("run {} spent {} of {}", run, r.ledger.total(), eps.value()));
    worst_ratio = std::max(worst_ratio, r.ledger.total() / eps.value());
  }
  if (out.pass) out.detail = fmt::format("100 runs, max spent/eps = {:.6f}", worst_ratio);
  return out;
}

Outcome structural_invariants() {
  Outcome out;
  const Graph g = erdos_renyi_weighted(30, 0.25, 10, 31);
  const auto lambda = exact_lambda(g);
  std::size_t steps = 0, queries = 0;
  for (double eps_value : {0.5, 1.0, 4.0}) {
    const Epsilon eps(eps_value);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng iso_rng = Rng(seed).child("iso");
      const VertexSet r = random_subset(g, iso_rng, 0.3, 2);
      const IsoCutsResult iso =
          private_isolating_cuts(g, r, IsoCutParams{eps, 0.01, g.vertices()}, iso_rng);
      VertexSet seen;
      for (const auto& [v, cut] : iso.cuts) {
        out.require(cut.side.intersected(r) == VertexSet{v} && cut.side.disjoint_from(seen),
                    fmt::format("isolating cuts eps {} seed {}", eps_value, seed));
        seen = seen.united(cut.side);
      }

      const StepObserver observer = [&](const StepRecord& record) {
        ++steps;
        VertexSet used;
        for (VertexId v : record.output.selected) {
          const VertexSet& side = record.output.sets.at(v).side;
          out.require(side.intersected(record.output.selected) == VertexSet{v} &&
                          side.disjoint_from(used),
                      fmt::format("step sets eps {} seed {}", eps_value, seed));
          out.require(!side.contains(record.source),
                      fmt::format("source inside a set eps {} seed {}", eps_value, seed));
          out.require(10 * side.intersected(record.terminals).size() <=
                          9 * record.terminals.size(),
                      fmt::format("set too large eps {} seed {}", eps_value, seed));
          used = used.united(side);
        }
      };
      Rng rng(seed);
      const FinalResult result = final_gh_tree(g, eps, rng, {}, &observer);
      out.require(steiner_tree_violation(result.tree, g.vertices()).empty() &&
                      result.tree.terminals == g.vertices() &&
                      result.tree.edges.size() + 1 == g.num_vertices(),
                  fmt::format("tree shape eps {} seed {}", eps_value, seed));
      for (VertexId u : g.vertices()) {
        for (VertexId v : g.vertices()) {
          if (u >= v) continue;
          const TreeQueryResult q = tree_query(result.tree, g, u, v);
          ++queries;
          out.require(q.cut.side.contains(u) && !q.cut.side.contains(v),
                      fmt::format("side does not separate {}-{}", u, v));
          out.require(q.cut.value - lambda[g.index_of(u)][g.index_of(v)] >= -kTol,
                      fmt::format("negative side error {}-{}", u, v));
        }
      }
    }
  }
  if (out.pass) {
    out.detail = fmt::format("300 runs at n=30, {} steps, {} queries", steps, queries);
  }
  return out;
}

Outcome penalty_mechanism() {
  Outcome out;
  // Two unit 15-cliques joined by one edge; the exact isolating cut of 0 is
  // its own clique, half of U = V.
  const Graph g = planted_community(15, 1.0, 1.0, 0);
  const VertexSet terminals{0, 29};
  const VertexSet u = g.vertices();
  const auto exact = isolating_cuts_exact(g, terminals);
  out.require(2 * exact.at(0).side.intersected(u).size() <= u.size(),
              "instance: exact cut holds more than half of U");
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const IsoCutsResult r =
        private_isolating_cuts(g, terminals, IsoCutParams{Epsilon(1.0), 0.01, u}, rng);
    if (10 * r.cuts.at(0).side.intersected(u).size() <= 9 * u.size()) ++good;
  }
  out.require(good >= 95, fmt::format("only {}/100 seeds within 0.9|U|", good));
  if (out.pass) out.detail = fmt::format("{}/100 seeds with |S_v cap U| <= 0.9|U|", good);
  return out;
}

Outcome error_monotonicity() {
  Outcome out;
  std::istringstream text(
      "generator = erdos-renyi-weighted\n"
      "generator.n = 50\n"
      "generator.p = 0.2\n"
      "generator_seed = 7\n"
      "eps = 0.5, 1, 2, 4\n"
      "seeds = 1-20\n"
      "mode = private\n");
  const ExperimentReport report = run_experiment(parse_config(text));
  const double n = 50.0;
  const double lg8 = std::pow(std::log2(n), 8);
  std::vector<std::string> parts;
  double previous = INFINITY;
  for (const EpsSummary& s : report.per_eps) {
    out.require(s.median_max_side_error.has_value(), "every seed aborted at some eps");
    if (!s.median_max_side_error) continue;
    const double m = *s.median_max_side_error;
    out.require(std::isfinite(m) && m > 0.0,
                fmt::format("median {} at eps {} not finite and positive", m, s.eps.value()));
    out.require(m <= previous,
                fmt::format("median rose to {} at eps {}", m, s.eps.value()));
    previous = m;
    parts.push_back(fmt::format("eps={} median={} ratio={:.3e}", s.eps.value(), m,
                                m / (n * lg8 / s.eps.value())));
  }
  if (out.pass) out.detail = fmt::format("{}", fmt::join(parts, "; "));
  return out;
}

Outcome depth_aborts() {
  Outcome out;
  const Graph g = erdos_renyi_weighted(100, 0.1, 10, 100);
  PipelineConstants constants;
  constants.c_depth = 4.0;
  int aborts = 0;
  int deepest = 0;
  int t_max = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    try {
      const FinalResult r = final_gh_tree(g, Epsilon(1.0), rng, constants);
      deepest = std::max(deepest, r.max_depth);
      t_max = r.t_max;
    } catch (const RecursionAborted&) {
      ++aborts;
    }
  }
  out.require(aborts <= 2, fmt::format("{}/100 runs aborted", aborts));
  if (out.pass) {
    out.detail = fmt::format("{}/100 aborts, deepest recursion {} of t_max {}", aborts,
                             deepest, t_max);
  }
  return out;
}

Outcome k_cut_guarantee() {
  Outcome out;
  double worst = 0.0;
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 6, 0.5 + 0.1 * (trial % 3), 9,
                                         40000 + trial);
    Rng rng(trial);
    const SteinerTree tree = final_gh_tree(g, Epsilon::infinite(), rng).tree;
    for (std::size_t k : {2u, 3u}) {
      const KCutSolution s = min_k_cut(tree, g, k);
      const double opt = oracle::min_k_cut(g, k);
      out.require(s.partition.size() == k &&
                      std::abs(s.value - partition_weight(g, s.partition)) <= kTol,
                  fmt::format("partition shape instance {} k {}", trial, k));
      out.require(s.value <= 2.0 * opt + kTol,
                  fmt::format("instance {} k {}: {} > 2*{}", trial, k, s.value, opt));
      if (opt > 0) worst = std::max(worst, s.value / opt);
      ++checked;
    }
  }
  if (out.pass) {
    out.detail = fmt::format("{} (instance, k) pairs, worst value/OPT = {:.3f}", checked, worst);
  }
  return out;
}

Outcome csv_determinism() {
  Outcome out;
  const std::string config_text =
      "generator = planted-community\n"
      "generator.block = 10\n"
      "generator.p_in = 0.6\n"
      "generator_seed = 4\n"
      "eps = 0.5, 2\n"
      "seeds = 1-5\n"
      "mode = private\n";
  const auto dir = std::filesystem::temp_directory_path();
  const std::string paths[2] = {(dir / "dpgh_acceptance_a.csv").string(),
                                (dir / "dpgh_acceptance_b.csv").string()};
  for (const std::string& path : paths) {
    std::istringstream text(config_text);
    save_csv(run_experiment(parse_config(text)), path);
  }
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string first = slurp(paths[0]);
  const std::string second = slurp(paths[1]);
  out.require(!first.empty() && first == second, "CSV files differ");
  for (const std::string& path : paths) std::filesystem::remove(path);
  if (out.pass) out.detail = fmt::format("two runs, {} identical bytes", first.size());
  return out;
}

Outcome desk_runtime() {
  Outcome out;
  const Graph g = erdos_renyi_weighted(200, 0.1005, 10, 3);
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1);
  const FinalResult r = final_gh_tree(g, Epsilon(1.0), rng);
  const double private_seconds = seconds_since(start);
  const auto noiseless_start = std::chrono::steady_clock::now();
  Rng rng2(1);
  final_gh_tree(g, Epsilon::infinite(), rng2);
  const double noiseless_seconds = seconds_since(noiseless_start);
  out.require(steiner_tree_violation(r.tree, g.vertices()).empty(), "invalid tree");
  out.require(private_seconds < 300.0,
              fmt::format("private run took {:.1f}s", private_seconds));
  out.require(noiseless_seconds < 300.0,
              fmt::format("noiseless run took {:.1f}s", noiseless_seconds));
  if (out.pass) {
    out.detail = fmt::format("n=200 m={}: eps=1 {:.2f}s, noiseless {:.2f}s", g.num_edges(),
                             private_seconds, noiseless_seconds);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact oracle suite", exact_oracle_suite},
      {"noiseless equivalence", noiseless_equivalence},
      {"privacy budget ledger", privacy_ledger},
      {"structural invariants under noise", structural_invariants},
      {"penalty mechanism", penalty_mechanism},
      {"error monotonicity and finiteness", error_monotonicity},
      {"depth and abort rate", depth_aborts},
      {"k-cut guarantee", k_cut_guarantee},
      {"CSV determinism", csv_determinism},
      {"desk-scale runtime", desk_runtime},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    fmt::print("[{:2}] {} {}: {}\n", i + 1, outcome.pass ? "PASS" : "FAIL",
               criteria[i].first, outcome.detail);
    std::fflush(stdout);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
