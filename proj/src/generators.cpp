#include "dpgh/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dpgh/dp_mech.hpp"

namespace dpgh {
namespace {

std::vector<VertexId> first_vertices(std::size_t n) {
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
  return ids;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

double param(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::domain_error("missing parameter '" + key + "'");
  return it->second;
}

double param_or(const std::map<std::string, double>& params,
                const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::size_t count_param(const std::map<std::string, double>& params,
                        const std::string& key) {
  const double value = param(params, key);
  if (!(value >= 0.0) || value != std::floor(value)) {
    throw std::domain_error("parameter '" + key + "' must be a nonnegative integer");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

Graph erdos_renyi_weighted(std::size_t n, double p, int max_weight,
                           std::uint64_t seed) {
  require(n >= 1, "erdos-renyi needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "erdos-renyi needs p in [0, 1]");
  require(max_weight >= 1, "erdos-renyi needs max_weight >= 1");
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!rng.bernoulli(p)) continue;
      const double w = 1.0 + static_cast<double>(
                                 rng.uniform_index(static_cast<std::uint64_t>(max_weight)));
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), w});
    }
  }
  return Graph(first_vertices(n), edges);
}

Graph cycle_graph(std::size_t n, double weight) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n), weight});
  }
  return Graph(first_vertices(n), edges);
}

Graph path_graph(std::size_t n, double weight) {
  require(n >= 2, "path needs n >= 2");
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), weight});
  }
  return Graph(first_vertices(n), edges);
}

Graph dumbbell(std::size_t k, double intra, double bridge) {
  require(k >= 2, "dumbbell needs k >= 2");
  std::vector<WeightedEdge> edges;
  for (std::size_t offset : {std::size_t{0}, k}) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        edges.push_back({static_cast<VertexId>(offset + i),
                         static_cast<VertexId>(offset + j), intra});
      }
    }
  }
  edges.push_back({static_cast<VertexId>(k - 1), static_cast<VertexId>(k), bridge});
  return Graph(first_vertices(2 * k), edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols, double weight) {
  require(rows >= 1 && cols >= 1 && rows * cols >= 2, "grid needs >= 2 cells");
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * cols + c);
  };
  std::vector<WeightedEdge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), weight});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), weight});
    }
  }
  return Graph(first_vertices(rows * cols), edges);
}

Graph planted_community(std::size_t block, double p_in, double bridge,
                        std::uint64_t seed) {
  require(block >= 2, "planted-community needs block >= 2");
  require(p_in >= 0.0 && p_in <= 1.0, "planted-community needs p_in in [0, 1]");
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  for (std::size_t offset : {std::size_t{0}, block}) {
    for (std::size_t i = 0; i < block; ++i) {
      for (std::size_t j = i + 1; j < block; ++j) {
        if (rng.bernoulli(p_in)) {
          edges.push_back({static_cast<VertexId>(offset + i),
                           static_cast<VertexId>(offset + j), 1.0});
        }
      }
    }
  }
  edges.push_back(
      {static_cast<VertexId>(block - 1), static_cast<VertexId>(block), bridge});
  return Graph(first_vertices(2 * block), edges);
}

Graph generate(const std::string& kind,
               const std::map<std::string, double>& params, std::uint64_t seed) {
  if (kind == "erdos-renyi-weighted") {
    return erdos_renyi_weighted(count_param(params, "n"), param(params, "p"),
                                static_cast<int>(param_or(params, "max_weight", 10)),
                                seed);
  }
  if (kind == "cycle") {
    return cycle_graph(count_param(params, "n"), param_or(params, "weight", 1));
  }
  if (kind == "path") {
    return path_graph(count_param(params, "n"), param_or(params, "weight", 1));
  }
  if (kind == "dumbbell") {
    return dumbbell(count_param(params, "k"), param_or(params, "intra", 10),
                    param_or(params, "bridge", 1));
  }
  if (kind == "grid") {
    return grid_graph(count_param(params, "rows"), count_param(params, "cols"),
                      param_or(params, "weight", 1));
  }
  if (kind == "planted-community") {
    return planted_community(count_param(params, "block"),
                             param_or(params, "p_in", 1.0),
                             param_or(params, "bridge", 1.0), seed);
  }
  throw std::domain_error("unknown generator '" + kind + "'");
}

}  // namespace dpgh
