#ifndef DPGH_SRC_ISOLATING_CUTS_IMPL_HPP_
#define DPGH_SRC_ISOLATING_CUTS_IMPL_HPP_

#include <bit>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "dpgh/graph.hpp"

namespace dpgh::detail {

inline int floor_log2(std::size_t x) {
  return static_cast<int>(std::bit_width(x)) - 1;
}

// Shared skeleton of exact and private isolating cuts.
//
// `st_cut(graph, S, T)` returns a side containing S and avoiding T. The
// terminals are identified with 0..|R|-1 in vertex order; round i separates
// the terminals whose bit i is 0 from the rest, so a vertex lands in region
// W_r exactly when its per-round side pattern spells r's index. Every region
// is then solved inside H_r (G with V \ W_r contracted to t_r), all at once
// on the disjoint union of the H_r. Vertices of W_r ∩ penalized get an extra
// `penalty` of weight towards t_r.
template <class StCut>
std::map<VertexId, CutSide> isolating_cuts_skeleton(const Graph& g,
                                                    const VertexSet& terminals,
                                                    const VertexSet& penalized,
                                                    double penalty,
                                                    StCut&& st_cut) {
  if (terminals.size() < 2) {
    throw std::domain_error("isolating cuts need at least two terminals");
  }
  if (!terminals.subset_of(g.vertices())) {
    throw std::domain_error("terminal outside the graph");
  }
  const std::size_t n = g.num_vertices();
  const std::size_t k = terminals.size();
  const int rounds = floor_log2(k - 1) + 1;

  std::vector<std::size_t> pattern(n, 0);
  for (int i = 0; i < rounds; ++i) {
    std::vector<VertexId> a;
    std::vector<VertexId> b;
    for (std::size_t r = 0; r < k; ++r) {
      ((r >> i) & 1U ? b : a).push_back(terminals.ids()[r]);
    }
    const VertexSet side = st_cut(g, VertexSet(std::move(a)), VertexSet(std::move(b)));
    std::vector<char> in_side(n, 0);
    for (VertexId v : side) in_side[g.index_of(v)] = 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_side[v]) pattern[v] |= std::size_t{1} << i;
    }
  }

  // region[v] = r if v ∈ W_r, else k.
  std::vector<std::size_t> region(n);
  for (std::size_t v = 0; v < n; ++v) region[v] = pattern[v] < k ? pattern[v] : k;

  const VertexId first_sink = g.fresh_label();
  auto sink = [&](std::size_t r) { return first_sink + static_cast<VertexId>(r); };
  GraphBuilder builder;
  for (std::size_t v = 0; v < n; ++v) {
    if (region[v] < k) builder.add_vertex(g.vertex_at(v));
  }
  for (std::size_t r = 0; r < k; ++r) builder.add_vertex(sink(r));
  for (std::size_t v = 0; v < n; ++v) {
    for (const Arc& arc : g.arcs(v)) {
      if (arc.to < v) continue;
      const std::size_t rv = region[v];
      const std::size_t ru = region[arc.to];
      if (rv == ru) {
        if (rv < k) builder.add_edge(g.vertex_at(v), g.vertex_at(arc.to), arc.weight);
        continue;
      }
      if (rv < k) builder.add_edge(g.vertex_at(v), sink(rv), arc.weight);
      if (ru < k) builder.add_edge(g.vertex_at(arc.to), sink(ru), arc.weight);
    }
  }
  if (penalty > 0.0) {
    for (VertexId u : penalized) {
      const std::size_t r = region[g.index_of(u)];
      if (r < k) builder.add_edge(u, sink(r), penalty);
    }
  }
  const Graph combined = std::move(builder).build();

  std::vector<VertexId> sinks;
  for (std::size_t r = 0; r < k; ++r) sinks.push_back(sink(r));
  const VertexSet side = st_cut(combined, terminals, VertexSet(std::move(sinks)));

  std::vector<std::vector<VertexId>> members(k);
  for (VertexId v : side) {
    if (v >= first_sink) continue;
    members[region[g.index_of(v)]].push_back(v);
  }
  std::map<VertexId, CutSide> out;
  for (std::size_t r = 0; r < k; ++r) {
    VertexSet s(std::move(members[r]));
    const double value = cut_weight(g, s);
    out.emplace(terminals.ids()[r], CutSide{std::move(s), value});
  }
  return out;
}

}  // namespace dpgh::detail

#endif  // DPGH_SRC_ISOLATING_CUTS_IMPL_HPP_
