#include "max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace dpgh::detail {

FlowNetwork::FlowNetwork(const Graph& g) : graph_(&g), out_(g.num_vertices()) {
  edges_.reserve(2 * g.num_edges());
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (const Arc& arc : g.arcs(i)) {
      if (arc.to < i) continue;
      // An undirected edge is a pair of opposite arcs sharing capacity w.
      out_[i].push_back(edges_.size());
      edges_.push_back({arc.to, arc.weight});
      out_[arc.to].push_back(edges_.size());
      edges_.push_back({i, arc.weight});
    }
  }
}

bool FlowNetwork::build_levels(std::size_t s, std::size_t t) {
  level_.assign(out_.size(), -1);
  std::queue<std::size_t> queue;
  level_[s] = 0;
  queue.push(s);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t id : out_[v]) {
      const Edge& e = edges_[id];
      if (e.residual > 0.0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        queue.push(e.to);
      }
    }
  }
  return level_[t] >= 0;
}

double FlowNetwork::augment(std::size_t v, std::size_t t, double limit) {
  if (v == t) return limit;
  for (std::size_t& k = cursor_[v]; k < out_[v].size(); ++k) {
    const std::size_t id = out_[v][k];
    Edge& e = edges_[id];
    if (e.residual <= 0.0 || level_[e.to] != level_[v] + 1) continue;
    const double pushed = augment(e.to, t, std::min(limit, e.residual));
    if (pushed > 0.0) {
      // Assigning instead of subtracting keeps a saturated bottleneck at
      // exactly zero.
      e.residual = pushed == e.residual ? 0.0 : e.residual - pushed;
      edges_[id ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0.0;
}

double FlowNetwork::max_flow(std::size_t s, std::size_t t) {
  source_ = s;
  double total = 0.0;
  while (build_levels(s, t)) {
    cursor_.assign(out_.size(), 0);
    while (true) {
      const double pushed =
          augment(s, t, std::numeric_limits<double>::infinity());
      if (pushed <= 0.0) break;
      total += pushed;
    }
  }
  // Final BFS leaves level_ marking the residual-reachable set.
  build_levels(s, t);
  return total;
}

VertexSet FlowNetwork::source_side() const {
  std::vector<VertexId> side;
  for (std::size_t i = 0; i < level_.size(); ++i) {
    if (level_[i] >= 0) side.push_back(graph_->vertex_at(i));
  }
  return VertexSet(std::move(side));
}

}  // namespace dpgh::detail
