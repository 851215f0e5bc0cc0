#include "dpgh/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dpgh/applications.hpp"
#include "dpgh/exact_cuts.hpp"
#include "dpgh/generators.hpp"
#include "dpgh/io.hpp"

namespace dpgh {
namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(separator, start);
    parts.push_back(trim(text.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

double parse_double(const std::string& text, std::size_t line) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, "not a number: '" + text + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(const std::string& text, std::size_t line) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, "not a nonnegative integer: '" + text + "'");
  }
  return value;
}

Epsilon parse_epsilon(const std::string& text, std::size_t line) {
  if (text == "inf" || text == "INFINITE" || text == "infinite") {
    return Epsilon::infinite();
  }
  const double value = parse_double(text, line);
  if (!(value > 0.0)) throw ValidationError(fmt::format("line {}: eps must be > 0", line));
  return Epsilon(value);
}

bool eps_less(Epsilon a, Epsilon b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

bool eps_equal(Epsilon a, Epsilon b) { return !eps_less(a, b) && !eps_less(b, a); }

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::optional<double> env_double(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value > 0.0)) {
    throw ValidationError(fmt::format("{} must be a positive number", name));
  }
  return value;
}

SteinerTree build_tree(const ExperimentConfig& config, const Graph& g,
                       std::uint64_t seed, Epsilon eps, CellSummary& cell) {
  if (config.mode == Mode::kExactBaseline) return gomory_hu_exact(g);
  Rng rng = Rng(seed).child("eps=" + format_eps(eps));
  FinalResult result = final_gh_tree(g, eps, rng, config.constants);
  cell.max_depth = result.max_depth;
  cell.epsilon_spent = result.ledger.total();
  return std::move(result.tree);
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kPrivate:
      return "private";
    case Mode::kNoiseless:
      return "noiseless";
    case Mode::kExactBaseline:
      return "exact-baseline";
  }
  return "private";
}

Mode parse_mode(const std::string& text) {
  if (text == "private") return Mode::kPrivate;
  if (text == "noiseless") return Mode::kNoiseless;
  if (text == "exact-baseline") return Mode::kExactBaseline;
  throw ValidationError("unknown mode '" + text + "'");
}

void ExperimentConfig::validate() const {
  if (input.empty() == generator.empty()) {
    throw ValidationError("config needs exactly one of 'input' or 'generator'");
  }
  if (seeds.empty()) throw ValidationError("config needs at least one seed");
  if (mode == Mode::kPrivate && eps.empty()) {
    throw ValidationError("private mode needs at least one eps value");
  }
  for (double c : {constants.c1, constants.c2, constants.c_depth, constants.penalty_const}) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw ValidationError("constants must be positive and finite");
    }
  }
}

std::vector<Epsilon> ExperimentConfig::effective_eps() const {
  if (mode != Mode::kPrivate) return {Epsilon::infinite()};
  std::vector<Epsilon> sorted = eps;
  std::sort(sorted.begin(), sorted.end(), eps_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end(), eps_equal), sorted.end());
  return sorted;
}

ExperimentConfig parse_config(std::istream& in, const PipelineConstants& defaults) {
  ExperimentConfig config;
  config.constants = defaults;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto equals = text.find('=');
    if (equals == std::string::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, equals));
    std::string value = trim(text.substr(equals + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }

    if (key == "input") {
      config.input = value;
    } else if (key == "generator") {
      config.generator = value;
    } else if (key.rfind("generator.", 0) == 0) {
      config.generator_params[key.substr(10)] = parse_double(value, line);
    } else if (key == "generator_seed") {
      config.generator_seed = parse_unsigned(value, line);
    } else if (key == "eps") {
      config.eps.clear();
      for (const std::string& item : split(value, ',')) {
        config.eps.push_back(parse_epsilon(item, line));
      }
    } else if (key == "seeds") {
      config.seeds.clear();
      for (const std::string& item : split(value, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
          config.seeds.push_back(parse_unsigned(item, line));
          continue;
        }
        const std::uint64_t lo = parse_unsigned(trim(item.substr(0, dash)), line);
        const std::uint64_t hi = parse_unsigned(trim(item.substr(dash + 1)), line);
        if (hi < lo) throw ParseError(line, "empty seed range '" + item + "'");
        for (std::uint64_t s = lo; s <= hi; ++s) config.seeds.push_back(s);
      }
    } else if (key == "mode") {
      config.mode = parse_mode(value);
    } else if (key == "c1") {
      config.constants.c1 = parse_double(value, line);
    } else if (key == "c2") {
      config.constants.c2 = parse_double(value, line);
    } else if (key == "c_depth") {
      config.constants.c_depth = parse_double(value, line);
    } else if (key == "penalty_const") {
      config.constants.penalty_const = parse_double(value, line);
    } else if (key == "output") {
      config.output = value;
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  return config;
}

ExperimentConfig load_config(const std::string& path, const PipelineConstants& defaults) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_config(in, defaults);
}

PipelineConstants constants_from_environment() {
  PipelineConstants constants;
  if (auto v = env_double("DPGH_C1")) constants.c1 = *v;
  if (auto v = env_double("DPGH_C2")) constants.c2 = *v;
  if (auto v = env_double("DPGH_C_DEPTH")) constants.c_depth = *v;
  if (auto v = env_double("DPGH_PENALTY_CONST")) constants.penalty_const = *v;
  return constants;
}

Graph load_instance(const ExperimentConfig& config) {
  if (!config.input.empty()) return load_graph(config.input);
  return generate(config.generator, config.generator_params, config.generator_seed);
}

std::string format_eps(Epsilon eps) {
  return eps.is_infinite() ? "inf" : fmt::format("{}", eps.value());
}

ExperimentReport run_experiment(const ExperimentConfig& config, const Graph& g) {
  config.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  const SteinerTree exact = gomory_hu_exact(g);
  const std::vector<PairEdge> exact_pairs = path_minimum_edges(exact);

  ExperimentReport report;
  for (Epsilon eps : config.effective_eps()) {
    EpsSummary summary{eps, std::nullopt, std::nullopt, 0.0, 0};
    std::vector<double> side_maxima;
    std::vector<double> value_maxima;
    std::vector<std::uint64_t> seeds = config.seeds;
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    for (std::uint64_t seed : seeds) {
      const auto cell_start = Clock::now();
      CellSummary cell{seed, eps};
      SteinerTree tree;
      try {
        tree = build_tree(config, g, seed, eps, cell);
      } catch (const RecursionAborted&) {
        cell.aborted = true;
        ++summary.aborts;
        ++report.abort_count;
      }
      if (!cell.aborted) {
        const std::vector<PairEdge> pairs = path_minimum_edges(tree);
        const std::vector<double> cut_weights = tree_edge_cut_weights(tree, g);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const PairEdge& mine = pairs[p];
          const PairEdge& truth = exact_pairs[p];
          if (mine.u != truth.u || mine.v != truth.v) {
            throw std::logic_error("pair order differs between trees");
          }
          const double lambda = exact.edges[truth.edge].weight;
          const double value = tree.edges[mine.edge].weight;
          const double side_weight = cut_weights[mine.edge];
          const ExperimentRow row{mine.u,      mine.v,
                                  seed,        eps,
                                  lambda,      value,
                                  side_weight, side_weight - lambda,
                                  value - lambda};
          cell.max_side_error = std::max(cell.max_side_error, row.side_error);
          cell.max_abs_value_error =
              std::max(cell.max_abs_value_error, std::abs(row.value_error));
          report.rows.push_back(row);
        }
        side_maxima.push_back(cell.max_side_error);
        value_maxima.push_back(cell.max_abs_value_error);
        summary.max_side_error = std::max(summary.max_side_error, cell.max_side_error);
      }
      cell.wall_seconds =
          std::chrono::duration<double>(Clock::now() - cell_start).count();
      report.cells.push_back(cell);
    }
    if (!side_maxima.empty()) {
      summary.median_max_side_error = median(side_maxima);
      summary.median_max_abs_value_error = median(value_maxima);
    }
    report.per_eps.push_back(summary);
  }

  auto row_key = [](const ExperimentRow& r) {
    return std::make_tuple(r.seed, r.pair_s, r.pair_t);
  };
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [&](const ExperimentRow& a, const ExperimentRow& b) {
                     if (eps_less(a.eps, b.eps)) return true;
                     if (eps_less(b.eps, a.eps)) return false;
                     return row_key(a) < row_key(b);
                   });
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_experiment(config, load_instance(config));
}

void write_csv(std::ostream& out, const ExperimentReport& report) {
  fmt::print(out,
             "pair_s,pair_t,seed,eps,lambda_exact,tree_value,side_true_weight,"
             "side_error,value_error\n");
  for (const ExperimentRow& r : report.rows) {
    fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", r.pair_s, r.pair_t, r.seed,
               format_eps(r.eps), r.lambda_exact, r.tree_value, r.side_true_weight,
               r.side_error, r.value_error);
  }
}

void save_csv(const ExperimentReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_csv(out, report);
}

void write_summary(std::ostream& out, const ExperimentReport& report) {
  auto show = [](const std::optional<double>& v) {
    return v ? fmt::format("{:.6g}", *v) : std::string("n/a");
  };
  fmt::print(out, "{:>8} {:>14} {:>14} {:>14} {:>7}\n", "eps", "median_max_side",
             "max_side", "median_max_val", "aborts");
  for (const EpsSummary& s : report.per_eps) {
    fmt::print(out, "{:>8} {:>14} {:>14.6g} {:>14} {:>7}\n", format_eps(s.eps),
               show(s.median_max_side_error), s.max_side_error,
               show(s.median_max_abs_value_error), s.aborts);
  }
  fmt::print(out, "rows={} aborts={} wall={:.3f}s\n", report.rows.size(),
             report.abort_count, report.wall_seconds);
  fmt::print(out, "note: side_true_weight and lambda_exact are non-private diagnostics\n");
}

}  // namespace dpgh
