#ifndef DPGH_SRC_MAX_FLOW_HPP_
#define DPGH_SRC_MAX_FLOW_HPP_

#include <cstddef>
#include <vector>

#include "dpgh/graph.hpp"

namespace dpgh::detail {

// Dinic's blocking-flow max-flow on an undirected graph with real
// capacities. Every augmentation zeroes the residual of its bottleneck arc
// exactly, so the phase bound of the integral case carries over.
class FlowNetwork {
 public:
  explicit FlowNetwork(const Graph& g);

  // Returns the flow value; afterwards source_side() is the set of vertices
  // reachable from s in the residual network.
  double max_flow(std::size_t s, std::size_t t);
  VertexSet source_side() const;

 private:
  struct Edge {
    std::size_t to;
    double residual;
  };

  bool build_levels(std::size_t s, std::size_t t);
  double augment(std::size_t v, std::size_t t, double limit);

  const Graph* graph_;
  std::vector<Edge> edges_;  // edge i pairs with edge i ^ 1
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::size_t source_ = 0;
};

}  // namespace dpgh::detail

#endif  // DPGH_SRC_MAX_FLOW_HPP_
