#include "dpgh/applications.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dpgh {
namespace {

TreeQueryResult cut_for_edge(const SteinerTree& tree, const Graph& g,
                             std::size_t edge, VertexId anchor) {
  VertexSet side =
      assignment_preimage(tree, tree_component(tree, edge, anchor));
  return TreeQueryResult{tree.edges[edge].weight, make_cut_side(g, std::move(side))};
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

TreeQueryResult tree_query(const SteinerTree& tree, const Graph& g, VertexId u,
                           VertexId v) {
  if (u == v) throw std::domain_error("tree query needs u != v");
  const std::vector<std::size_t> path = tree_path(tree, u, v);
  std::size_t lightest = path.front();
  for (std::size_t e : path) {
    if (tree.edges[e].weight < tree.edges[lightest].weight) lightest = e;
  }
  return cut_for_edge(tree, g, lightest, u);
}

std::vector<PairEdge> path_minimum_edges(const SteinerTree& tree) {
  const auto& ids = tree.terminals.ids();
  const std::size_t n = ids.size();
  auto position = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), v) -
                                    ids.begin());
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacent(n);
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    const std::size_t a = position(tree.edges[e].a);
    const std::size_t b = position(tree.edges[e].b);
    adjacent[a].emplace_back(b, e);
    adjacent[b].emplace_back(a, e);
  }

  std::vector<PairEdge> out;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(n);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(best.begin(), best.end(), kNone);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    stack.assign(1, root);
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& [y, e] : adjacent[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        const std::size_t carried = best[x];
        best[y] = (carried == kNone || tree.edges[e].weight < tree.edges[carried].weight)
                      ? e
                      : carried;
        stack.push_back(y);
      }
    }
    for (std::size_t other = root + 1; other < n; ++other) {
      if (best[other] == kNone) {
        throw std::domain_error("tree does not connect all terminals");
      }
      out.push_back({ids[root], ids[other], best[other]});
    }
  }
  return out;
}

std::vector<double> tree_edge_cut_weights(const SteinerTree& tree, const Graph& g) {
  std::vector<double> weights;
  weights.reserve(tree.edges.size());
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    const VertexSet side =
        assignment_preimage(tree, tree_component(tree, e, tree.edges[e].a));
    weights.push_back(cut_weight(g, side));
  }
  return weights;
}

TreeQueryResult global_min_cut(const SteinerTree& tree, const Graph& g) {
  if (tree.edges.empty()) throw std::domain_error("single-node tree has no cut");
  std::size_t lightest = 0;
  for (std::size_t e = 1; e < tree.edges.size(); ++e) {
    if (tree.edges[e].weight < tree.edges[lightest].weight) lightest = e;
  }
  return cut_for_edge(tree, g, lightest, tree.edges[lightest].a);
}

double partition_weight(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<std::size_t> part_of(g.num_vertices(), parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (VertexId v : parts[p]) part_of[g.index_of(v)] = p;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (const Arc& arc : g.arcs(i)) {
      if (arc.to > i && part_of[i] != part_of[arc.to]) total += arc.weight;
    }
  }
  return total;
}

KCutSolution min_k_cut(const SteinerTree& tree, const Graph& g, std::size_t k) {
  if (k < 2 || k > tree.terminals.size()) {
    throw std::domain_error("k must lie in [2, number of terminals]");
  }
  std::vector<std::size_t> order(tree.edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tree.edges[a].weight < tree.edges[b].weight;
  });

  const std::size_t n = g.num_vertices();
  std::vector<std::vector<char>> sides;
  for (std::size_t r = 0; r + 1 < k; ++r) {
    const std::size_t e = order[r];
    const VertexSet side = assignment_preimage(
        tree, tree_component(tree, e, tree.edges[e].a));
    std::vector<char> in(n, 0);
    for (VertexId v : side) in[g.index_of(v)] = 1;
    sides.push_back(std::move(in));
  }

  struct Crossing {
    std::size_t a;
    std::size_t b;
    double weight;
  };
  std::vector<Crossing> removed;
  DisjointSets pieces(n);
  std::size_t count = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Arc& arc : g.arcs(i)) {
      if (arc.to < i) continue;
      const bool crosses = std::any_of(sides.begin(), sides.end(), [&](const auto& in) {
        return in[i] != in[arc.to];
      });
      if (crosses) {
        removed.push_back({i, arc.to, arc.weight});
      } else if (pieces.unite(i, arc.to)) {
        --count;
      }
    }
  }
  std::stable_sort(removed.begin(), removed.end(),
                   [](const Crossing& x, const Crossing& y) { return x.weight > y.weight; });
  for (const Crossing& c : removed) {
    if (count <= k) break;
    if (pieces.unite(c.a, c.b)) --count;
  }
  // A disconnected graph can leave more than k pieces; joining them costs nothing.
  for (std::size_t i = 1; i < n && count > k; ++i) {
    if (pieces.unite(0, i)) --count;
  }
  if (count != k) throw std::logic_error("k-cut produced the wrong part count");

  std::vector<std::vector<VertexId>> grouped(n);
  for (std::size_t i = 0; i < n; ++i) grouped[pieces.find(i)].push_back(g.vertex_at(i));
  KCutSolution out;
  for (auto& members : grouped) {
    if (!members.empty()) out.partition.emplace_back(std::move(members));
  }
  std::sort(out.partition.begin(), out.partition.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  out.value = partition_weight(g, out.partition);
  return out;
}

}  // namespace dpgh
