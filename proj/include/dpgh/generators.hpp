#ifndef DPGH_GENERATORS_HPP_
#define DPGH_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "dpgh/graph.hpp"

namespace dpgh {

// G(n, p) with integer weights drawn uniformly from [1, max_weight].
Graph erdos_renyi_weighted(std::size_t n, double p, int max_weight,
                           std::uint64_t seed);
Graph cycle_graph(std::size_t n, double weight = 1.0);
Graph path_graph(std::size_t n, double weight = 1.0);
// Two k-cliques {0..k-1}, {k..2k-1} joined by the edge (k-1, k).
Graph dumbbell(std::size_t k, double intra, double bridge);
Graph grid_graph(std::size_t rows, std::size_t cols, double weight = 1.0);
// Two unit-weight G(block, p_in) blocks joined by one bridge (block-1, block).
Graph planted_community(std::size_t block, double p_in, double bridge,
                        std::uint64_t seed);

// Named generator with numeric parameters, as used by configs and the CLI:
//   erdos-renyi-weighted  n, p, max_weight=10
//   cycle | path          n, weight=1
//   dumbbell              k, intra=10, bridge=1
//   grid                  rows, cols, weight=1
//   planted-community     block, p_in=1, bridge=1
// Throws std::domain_error on unknown kinds, missing or invalid parameters.
Graph generate(const std::string& kind,
               const std::map<std::string, double>& params, std::uint64_t seed);

}  // namespace dpgh

#endif  // DPGH_GENERATORS_HPP_
