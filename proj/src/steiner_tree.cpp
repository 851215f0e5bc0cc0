#include "dpgh/steiner_tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace dpgh {
namespace {

// Adjacency of the tree as (neighbor, edge index), keyed by terminal.
std::map<VertexId, std::vector<std::pair<VertexId, std::size_t>>> tree_adjacency(
    const SteinerTree& tree) {
  std::map<VertexId, std::vector<std::pair<VertexId, std::size_t>>> adj;
  for (VertexId u : tree.terminals) adj[u];
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    adj[tree.edges[i].a].push_back({tree.edges[i].b, i});
    adj[tree.edges[i].b].push_back({tree.edges[i].a, i});
  }
  return adj;
}

}  // namespace

SteinerTree single_node_tree(VertexId terminal, const VertexSet& vertices) {
  SteinerTree tree;
  tree.terminals = VertexSet{terminal};
  for (VertexId v : vertices) tree.assignment[v] = terminal;
  tree.assignment[terminal] = terminal;
  return tree;
}

std::vector<std::size_t> tree_path(const SteinerTree& tree, VertexId u,
                                   VertexId v) {
  if (!tree.terminals.contains(u) || !tree.terminals.contains(v)) {
    throw std::domain_error("tree path endpoints must be terminals");
  }
  const auto adj = tree_adjacency(tree);
  std::map<VertexId, std::pair<VertexId, std::size_t>> parent;
  std::queue<VertexId> queue;
  parent[u] = {u, 0};
  queue.push(u);
  while (!queue.empty() && !parent.contains(v)) {
    const VertexId x = queue.front();
    queue.pop();
    for (const auto& [y, edge] : adj.at(x)) {
      if (parent.contains(y)) continue;
      parent[y] = {x, edge};
      queue.push(y);
    }
  }
  if (!parent.contains(v)) throw std::domain_error("tree is disconnected");
  std::vector<std::size_t> path;
  for (VertexId x = v; x != u; x = parent[x].first) {
    path.push_back(parent[x].second);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

VertexSet tree_component(const SteinerTree& tree, std::size_t removed,
                         VertexId anchor) {
  const auto adj = tree_adjacency(tree);
  std::vector<VertexId> seen{anchor};
  std::map<VertexId, bool> visited{{anchor, true}};
  for (std::size_t head = 0; head < seen.size(); ++head) {
    for (const auto& [y, edge] : adj.at(seen[head])) {
      if (edge == removed || visited[y]) continue;
      visited[y] = true;
      seen.push_back(y);
    }
  }
  return VertexSet(std::move(seen));
}

VertexSet assignment_preimage(const SteinerTree& tree,
                              const VertexSet& terminal_subset) {
  std::vector<VertexId> out;
  for (const auto& [v, u] : tree.assignment) {
    if (terminal_subset.contains(u)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

std::string steiner_tree_violation(const SteinerTree& tree,
                                   const VertexSet& vertices) {
  if (tree.terminals.empty()) return "no terminals";
  if (tree.edges.size() + 1 != tree.terminals.size()) {
    return "edge count is not |U| - 1";
  }
  for (const TreeEdge& e : tree.edges) {
    if (!tree.terminals.contains(e.a) || !tree.terminals.contains(e.b)) {
      return "tree edge endpoint is not a terminal";
    }
    if (e.a == e.b) return "tree self-loop";
    if (!(e.weight >= 0.0)) return "negative tree edge weight";
  }
  const VertexSet reached =
      tree.edges.empty()
          ? VertexSet{tree.terminals.front()}
          : tree_component(tree, tree.edges.size(), tree.terminals.front());
  if (reached != tree.terminals) return "tree is not connected";
  if (tree.assignment.size() != vertices.size()) {
    return "assignment is not total on the vertex set";
  }
  for (const auto& [v, u] : tree.assignment) {
    if (!vertices.contains(v)) return "assignment has a foreign vertex";
    if (!tree.terminals.contains(u)) return "assignment value is not a terminal";
  }
  for (VertexId u : tree.terminals) {
    auto it = tree.assignment.find(u);
    if (it == tree.assignment.end() || it->second != u) {
      return "assignment is not the identity on terminals";
    }
  }
  return {};
}

}  // namespace dpgh
