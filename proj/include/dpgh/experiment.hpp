#ifndef DPGH_EXPERIMENT_HPP_
#define DPGH_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpgh/dp_mech.hpp"
#include "dpgh/gh_private.hpp"
#include "dpgh/graph.hpp"

namespace dpgh {

enum class Mode { kPrivate, kNoiseless, kExactBaseline };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct ExperimentConfig {
  std::string input;  // edge-list path; empty when a generator is used
  std::string generator;
  std::map<std::string, double> generator_params;
  std::uint64_t generator_seed = 0;
  std::vector<Epsilon> eps;
  std::vector<std::uint64_t> seeds;
  Mode mode = Mode::kPrivate;
  PipelineConstants constants;
  std::string output;

  // Throws ValidationError when the config cannot be run.
  void validate() const;
  // The ε values actually swept: `eps` in private mode, {∞} otherwise.
  std::vector<Epsilon> effective_eps() const;
};

// key = value lines with '#' comments. Keys: input, generator,
// generator.<param>, generator_seed, eps (comma list, "inf" allowed),
// seeds (comma list of integers or ranges a-b), mode (private | noiseless |
// exact-baseline), c1, c2, c_depth, penalty_const, output.
// Constants start from `defaults`.
ExperimentConfig parse_config(std::istream& in,
                              const PipelineConstants& defaults = {});
ExperimentConfig load_config(const std::string& path,
                             const PipelineConstants& defaults = {});

// Default constants overridden by DPGH_C1, DPGH_C2, DPGH_C_DEPTH and
// DPGH_PENALTY_CONST when set.
PipelineConstants constants_from_environment();

// Builds the instance the config describes.
Graph load_instance(const ExperimentConfig& config);

struct ExperimentRow {
  VertexId pair_s;
  VertexId pair_t;
  std::uint64_t seed;
  Epsilon eps;
  double lambda_exact;
  double tree_value;
  double side_true_weight;  // non-private diagnostic
  double side_error;        // side_true_weight - lambda_exact
  double value_error;       // tree_value - lambda_exact
};

struct CellSummary {
  std::uint64_t seed;
  Epsilon eps;
  bool aborted = false;
  double max_side_error = 0.0;
  double max_abs_value_error = 0.0;
  int max_depth = 0;
  double epsilon_spent = 0.0;
  double wall_seconds = 0.0;
};

struct EpsSummary {
  Epsilon eps;
  // Medians over the non-aborted seeds; nullopt when every seed aborted.
  std::optional<double> median_max_side_error;
  std::optional<double> median_max_abs_value_error;
  double max_side_error = 0.0;
  int aborts = 0;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;  // sorted by (eps, seed, pair_s, pair_t)
  std::vector<CellSummary> cells;   // sorted by (eps, seed)
  std::vector<EpsSummary> per_eps;  // increasing ε
  int abort_count = 0;
  double wall_seconds = 0.0;
};

// Runs every (seed, ε) cell on g. Exact λ comes from gomory_hu_exact and is
// non-private tooling. Aborted cells contribute no rows.
ExperimentReport run_experiment(const ExperimentConfig& config, const Graph& g);
ExperimentReport run_experiment(const ExperimentConfig& config);

std::string format_eps(Epsilon eps);

// CSV rows only; timing stays out so equal inputs give equal bytes.
void write_csv(std::ostream& out, const ExperimentReport& report);
void save_csv(const ExperimentReport& report, const std::string& path);
void write_summary(std::ostream& out, const ExperimentReport& report);

}  // namespace dpgh

#endif  // DPGH_EXPERIMENT_HPP_
