#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dpgh/applications.hpp"
#include "dpgh/exact_cuts.hpp"
#include "dpgh/experiment.hpp"
#include "dpgh/generators.hpp"
#include "dpgh/gh_private.hpp"
#include "dpgh/io.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitAbort = 2;

dpgh::Epsilon parse_eps_flag(const std::string& text) {
  if (text == "inf") return dpgh::Epsilon::infinite();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value > 0.0)) {
    throw dpgh::ValidationError("--eps must be a positive number or 'inf'");
  }
  return dpgh::Epsilon(value);
}

std::string describe(const dpgh::VertexSet& set) {
  return fmt::format("{}", fmt::join(set.ids(), " "));
}

int run_build(const std::string& input, const std::string& eps_text,
              std::uint64_t seed, const std::string& out) {
  const dpgh::Graph g = dpgh::load_graph(input);
  const dpgh::Epsilon eps = parse_eps_flag(eps_text);
  dpgh::Rng rng(seed);
  const dpgh::FinalResult result =
      dpgh::final_gh_tree(g, eps, rng, dpgh::constants_from_environment());
  dpgh::save_tree(result.tree, out);
  fmt::print(std::cerr, "tree written to {} (depth {}, t_max {}, epsilon spent {:.6g})\n",
             out, result.max_depth, result.t_max, result.ledger.total());
  return 0;
}

int run_query(const std::string& tree_path, const std::string& graph_path,
              dpgh::VertexId s, dpgh::VertexId t) {
  const dpgh::SteinerTree tree = dpgh::load_tree(tree_path);
  const dpgh::Graph g = dpgh::load_graph(graph_path);
  const dpgh::TreeQueryResult answer = dpgh::tree_query(tree, g, s, t);
  fmt::print("value {}\n", answer.tree_value);
  fmt::print("side {}\n", describe(answer.cut.side));
  fmt::print("true_weight {} (non-private diagnostic)\n", answer.cut.value);
  return 0;
}

int run_kcut(const std::string& tree_path, const std::string& graph_path,
             std::size_t k) {
  const dpgh::SteinerTree tree = dpgh::load_tree(tree_path);
  const dpgh::Graph g = dpgh::load_graph(graph_path);
  const dpgh::KCutSolution solution = dpgh::min_k_cut(tree, g, k);
  fmt::print("value {} (non-private diagnostic)\n", solution.value);
  for (const dpgh::VertexSet& part : solution.partition) {
    fmt::print("part {}\n", describe(part));
  }
  return 0;
}

int run_exact(const std::string& input, const std::string& out) {
  const dpgh::Graph g = dpgh::load_graph(input);
  dpgh::save_tree(dpgh::gomory_hu_exact(g), out);
  return 0;
}

int run_bench(const std::string& config_path, const std::string& out) {
  dpgh::ExperimentConfig config =
      dpgh::load_config(config_path, dpgh::constants_from_environment());
  if (!out.empty()) config.output = out;
  if (config.output.empty()) {
    throw dpgh::ValidationError("no output path: pass --out or set 'output'");
  }
  const dpgh::ExperimentReport report = dpgh::run_experiment(config);
  dpgh::save_csv(report, config.output);
  dpgh::write_summary(std::cout, report);
  return 0;
}

int run_generate(const std::string& kind, const std::vector<std::string>& params,
                 std::uint64_t seed, const std::string& out) {
  std::map<std::string, double> values;
  for (const std::string& item : params) {
    const auto equals = item.find('=');
    if (equals == std::string::npos) {
      throw dpgh::ValidationError("--param expects key=value, got '" + item + "'");
    }
    try {
      values[item.substr(0, equals)] = std::stod(item.substr(equals + 1));
    } catch (const std::exception&) {
      throw dpgh::ValidationError("bad value in --param '" + item + "'");
    }
  }
  dpgh::save_graph(dpgh::generate(kind, values, seed), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private Gomory-Hu trees"};
  app.require_subcommand(1);

  std::string input, out, tree_path, graph_path, eps_text, config_path, kind;
  std::uint64_t seed = 0;
  dpgh::VertexId s = 0, t = 0;
  std::size_t k = 2;
  std::vector<std::string> params;

  CLI::App* build = app.add_subcommand("build", "Build an eps-DP approximate cut tree");
  build->add_option("--input", input, "Edge-list graph")->required();
  build->add_option("--eps", eps_text, "Privacy parameter, or 'inf' for noiseless")
      ->required();
  build->add_option("--seed", seed, "Random seed");
  build->add_option("--out", out, "Tree output path")->required();

  CLI::App* query = app.add_subcommand("query", "Min s-t cut read off a tree");
  query->add_option("--tree", tree_path)->required();
  query->add_option("--graph", graph_path)->required();
  query->add_option("-s", s)->required();
  query->add_option("-t", t)->required();

  CLI::App* kcut = app.add_subcommand("kcut", "Approximate minimum k-cut from a tree");
  kcut->add_option("--tree", tree_path)->required();
  kcut->add_option("--graph", graph_path)->required();
  kcut->add_option("-k", k)->required();

  CLI::App* exact = app.add_subcommand("exact", "Exact (non-private) Gomory-Hu tree");
  exact->add_option("--input", input)->required();
  exact->add_option("--out", out)->required();

  CLI::App* bench = app.add_subcommand("bench", "Run an error/eps sweep to CSV");
  bench->add_option("--config", config_path, "key = value config file")->required();
  bench->add_option("--out", out, "CSV path (overrides 'output')");

  CLI::App* gen = app.add_subcommand("generate", "Write a generated instance");
  gen->add_option("--kind", kind)->required();
  gen->add_option("--param", params, "key=value, repeatable");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return run_build(input, eps_text, seed, out);
    if (*query) return run_query(tree_path, graph_path, s, t);
    if (*kcut) return run_kcut(tree_path, graph_path, k);
    if (*exact) return run_exact(input, out);
    if (*bench) return run_bench(config_path, out);
    if (*gen) return run_generate(kind, params, seed, out);
  } catch (const dpgh::RecursionAborted& e) {
    fmt::print(std::cerr, "ABORT: {} (seed {})\n", e.what(), e.seed());
    return kExitAbort;
  } catch (const dpgh::ParseError& e) {
    fmt::print(std::cerr, "parse error: {}\n", e.what());
    return kExitValidation;
  } catch (const dpgh::ValidationError& e) {
    fmt::print(std::cerr, "invalid input: {}\n", e.what());
    return kExitValidation;
  } catch (const std::domain_error& e) {
    fmt::print(std::cerr, "invalid input: {}\n", e.what());
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    fmt::print(std::cerr, "invalid input: {}\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return 3;
  }
  return 0;
}
