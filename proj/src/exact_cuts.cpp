#include "dpgh/exact_cuts.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "isolating_cuts_impl.hpp"
#include "max_flow.hpp"

namespace dpgh {

MaxFlowResult min_st_cut_exact(const Graph& g, VertexId s, VertexId t) {
  if (s == t) throw std::domain_error("min s-t cut needs s != t");
  const std::size_t si = g.index_of(s);
  const std::size_t ti = g.index_of(t);
  detail::FlowNetwork network(g);
  network.max_flow(si, ti);
  // The reported value is recomputed from the side rather than taken from
  // the flow so both agree bit-for-bit with cut_weight elsewhere.
  CutSide cut = make_cut_side(g, network.source_side());
  const double value = cut.value;
  return MaxFlowResult{std::move(cut), value};
}

MaxFlowResult min_ST_cut_exact(const Graph& g, const VertexSet& s,
                               const VertexSet& t) {
  if (s.empty() || t.empty()) throw std::domain_error("S and T must be nonempty");
  if (!s.disjoint_from(t)) throw std::domain_error("S and T must be disjoint");
  if (!s.subset_of(g.vertices()) || !t.subset_of(g.vertices())) {
    throw std::domain_error("S or T is not a subset of V(G)");
  }
  // Each set is contracted onto its smallest member, so singletons leave the
  // graph untouched.
  const Contraction c = contract_sets(g, {{s, s.front()}, {t, t.front()}});
  const MaxFlowResult inner = min_st_cut_exact(c.graph, s.front(), t.front());
  CutSide cut = make_cut_side(g, c.map.expand(inner.cut.side));
  const double value = cut.value;
  return MaxFlowResult{std::move(cut), value};
}

std::map<VertexId, CutSide> isolating_cuts_exact(const Graph& g,
                                                 const VertexSet& terminals) {
  return detail::isolating_cuts_skeleton(
      g, terminals, VertexSet{}, 0.0,
      [](const Graph& h, const VertexSet& s, const VertexSet& t) {
        return min_ST_cut_exact(h, s, t).cut.side;
      });
}

SteinerTree gomory_hu_exact(const Graph& g) {
  if (g.num_vertices() == 0) throw std::domain_error("empty graph");
  if (g.num_vertices() == 1) {
    return single_node_tree(g.vertices().front(), g.vertices());
  }

  struct SuperEdge {
    std::size_t a;
    std::size_t b;
    double weight;
  };
  std::vector<VertexSet> nodes{g.vertices()};
  std::vector<SuperEdge> edges;

  auto other_end = [](const SuperEdge& e, std::size_t x) {
    return e.a == x ? e.b : e.a;
  };

  while (true) {
    auto split = std::find_if(nodes.begin(), nodes.end(),
                              [](const VertexSet& x) { return x.size() >= 2; });
    if (split == nodes.end()) break;
    const std::size_t k = static_cast<std::size_t>(split - nodes.begin());
    const VertexId s = nodes[k].ids()[0];
    const VertexId t = nodes[k].ids()[1];

    // Contract each subtree hanging off node k into one vertex.
    std::vector<std::pair<VertexSet, VertexId>> groups;
    std::vector<std::pair<std::size_t, VertexId>> edge_label;  // edge → label
    VertexId label = g.fresh_label();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].a != k && edges[e].b != k) continue;
      std::vector<std::size_t> stack{other_end(edges[e], k)};
      std::vector<char> seen(nodes.size(), 0);
      seen[k] = 1;
      seen[stack.back()] = 1;
      std::vector<VertexId> members;
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        members.insert(members.end(), nodes[x].begin(), nodes[x].end());
        for (const SuperEdge& f : edges) {
          if (f.a != x && f.b != x) continue;
          const std::size_t y = other_end(f, x);
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
      groups.emplace_back(VertexSet(std::move(members)), label);
      edge_label.emplace_back(e, label);
      ++label;
    }
    const Contraction c = contract_sets(g, std::move(groups));
    const MaxFlowResult cut = min_st_cut_exact(c.graph, s, t);
    const VertexSet& side = cut.cut.side;

    const std::size_t k2 = nodes.size();
    VertexSet s_part = nodes[k].intersected(side);
    VertexSet t_part = nodes[k].minus(side);
    nodes[k] = std::move(s_part);
    nodes.push_back(std::move(t_part));
    for (const auto& [e, lbl] : edge_label) {
      if (side.contains(lbl)) continue;
      if (edges[e].a == k) {
        edges[e].a = k2;
      } else {
        edges[e].b = k2;
      }
    }
    edges.push_back({k, k2, cut.value});
  }

  SteinerTree tree;
  tree.terminals = g.vertices();
  for (const SuperEdge& e : edges) {
    const VertexId a = nodes[e.a].front();
    const VertexId b = nodes[e.b].front();
    tree.edges.push_back({std::min(a, b), std::max(a, b), e.weight});
  }
  for (VertexId v : g.vertices()) tree.assignment[v] = v;
  return tree;
}

MaxFlowResult brute_force_min_cut(const Graph& g, VertexId s, VertexId t) {
  if (s == t) throw std::domain_error("min s-t cut needs s != t");
  const std::size_t n = g.num_vertices();
  if (n > 20) throw std::domain_error("brute force refused above 20 vertices");
  const std::size_t si = g.index_of(s);
  const std::size_t ti = g.index_of(t);

  std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Arc& arc : g.arcs(i)) {
      if (arc.to > i) edges.emplace_back(i, arc.to, arc.weight);
    }
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<VertexId> best_side;
  const std::uint32_t full = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!(mask >> si & 1U) || (mask >> ti & 1U)) continue;
    double value = 0.0;
    for (const auto& [a, b, w] : edges) {
      if ((mask >> a & 1U) != (mask >> b & 1U)) value += w;
    }
    if (value > best) continue;
    std::vector<VertexId> side;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) side.push_back(g.vertex_at(i));
    }
    if (value < best || side < best_side) {
      best = value;
      best_side = std::move(side);
    }
  }
  return MaxFlowResult{CutSide{VertexSet(std::move(best_side)), best}, best};
}

}  // namespace dpgh
