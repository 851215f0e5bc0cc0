#include "dpgh/graph.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

namespace dpgh {

VertexSet::VertexSet(std::initializer_list<VertexId> ids)
    : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

Graph::Graph(std::vector<VertexId> vertices,
             std::initializer_list<WeightedEdge> edges)
    : Graph(std::move(vertices),
            std::span<const WeightedEdge>(edges.begin(), edges.size())) {}

Graph::Graph(std::vector<VertexId> vertices,
             std::span<const WeightedEdge> edges) {
  const std::size_t given = vertices.size();
  vertices_ = VertexSet(std::move(vertices));
  if (vertices_.size() != given) {
    throw std::invalid_argument("duplicate vertex label");
  }

  std::vector<WeightedEdge> normalized;
  normalized.reserve(edges.size());
  for (const WeightedEdge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    if (!vertices_.contains(e.u) || !vertices_.contains(e.v)) {
      throw std::invalid_argument("edge endpoint is not a vertex");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw std::invalid_argument("edge weight must be finite and nonnegative");
    }
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(normalized.begin(), normalized.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  for (const WeightedEdge& e : normalized) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().weight += e.weight;
    } else {
      edges_.push_back(e);
    }
  }
  std::erase_if(edges_, [](const WeightedEdge& e) { return e.weight == 0.0; });

  adjacency_.assign(vertices_.size(), {});
  for (const WeightedEdge& e : edges_) {
    const std::size_t a = index_of(e.u);
    const std::size_t b = index_of(e.v);
    adjacency_[a].push_back({b, e.weight});
    adjacency_[b].push_back({a, e.weight});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Arc& x, const Arc& y) { return x.to < y.to; });
  }
}

std::size_t Graph::index_of(VertexId v) const {
  const auto& ids = vertices_.ids();
  auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) {
    throw std::domain_error("vertex " + std::to_string(v) + " not in graph");
  }
  return static_cast<std::size_t>(it - ids.begin());
}

double Graph::weight(VertexId u, VertexId v) const {
  if (u == v) return 0.0;
  const std::size_t a = index_of(u);
  const std::size_t b = index_of(v);
  const auto& list = adjacency_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Arc& x, std::size_t i) { return x.to < i; });
  return (it != list.end() && it->to == b) ? it->weight : 0.0;
}

double Graph::total_weight() const {
  double total = 0.0;
  for (const WeightedEdge& e : edges_) total += e.weight;
  return total;
}

VertexId Graph::fresh_label() const {
  return vertices_.empty() ? 0 : vertices_.back() + 1;
}

void GraphBuilder::add_edge(VertexId u, VertexId v, double w) {
  if (w == 0.0) return;
  edges_.push_back({u, v, w});
}

Graph GraphBuilder::build() && {
  return Graph(std::move(vertices_), edges_);
}

double cut_weight(const Graph& g, const VertexSet& s) {
  std::vector<char> inside(g.num_vertices(), 0);
  for (VertexId v : s) inside[g.index_of(v)] = 1;
  double total = 0.0;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (const Arc& arc : g.arcs(i)) {
      if (arc.to > i && inside[i] != inside[arc.to]) total += arc.weight;
    }
  }
  return total;
}

CutSide make_cut_side(const Graph& g, VertexSet side) {
  if (side.empty() || side.size() >= g.num_vertices()) {
    throw std::domain_error("cut side must be a nonempty proper subset");
  }
  const double value = cut_weight(g, side);
  return CutSide{std::move(side), value};
}

VertexId ContractionMap::operator()(VertexId v) const {
  for (const auto& [set, label] : groups_) {
    if (set.contains(v)) return label;
  }
  return v;
}

VertexSet ContractionMap::preimage(VertexId image) const {
  for (const auto& [set, label] : groups_) {
    if (label == image) return set;
  }
  return VertexSet{image};
}

VertexSet ContractionMap::expand(const VertexSet& contracted_side) const {
  std::vector<VertexId> out;
  for (VertexId v : contracted_side) {
    const VertexSet pre = preimage(v);
    out.insert(out.end(), pre.begin(), pre.end());
  }
  return VertexSet(std::move(out));
}

Contraction contract(const Graph& g, const VertexSet& x, VertexId label) {
  return contract_sets(g, {{x, label}});
}

Contraction contract_sets(const Graph& g,
                          std::vector<std::pair<VertexSet, VertexId>> groups) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> group_of(n, kUnassigned);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const VertexSet& set = groups[k].first;
    if (set.empty()) throw std::domain_error("cannot contract an empty set");
    for (VertexId v : set) {
      const std::size_t i = g.index_of(v);
      if (group_of[i] != kUnassigned) {
        throw std::domain_error("contracted sets must be disjoint");
      }
      group_of[i] = k;
    }
  }

  std::vector<VertexId> image(n);
  GraphBuilder builder;
  for (std::size_t i = 0; i < n; ++i) {
    if (group_of[i] == kUnassigned) {
      image[i] = g.vertex_at(i);
      builder.add_vertex(image[i]);
    } else {
      image[i] = groups[group_of[i]].second;
    }
  }
  for (const auto& [set, label] : groups) {
    if (g.contains(label) && group_of[g.index_of(label)] == kUnassigned) {
      throw std::domain_error("contraction label " + std::to_string(label) +
                              " collides with a remaining vertex");
    }
    builder.add_vertex(label);
  }
  for (const WeightedEdge& e : g.edges()) {
    const VertexId a = image[g.index_of(e.u)];
    const VertexId b = image[g.index_of(e.v)];
    if (a != b) builder.add_edge(a, b, e.weight);
  }
  // A repeated label across groups is reported by the Graph constructor.
  return Contraction{std::move(builder).build(),
                     ContractionMap(std::move(groups))};
}

bool are_neighboring(const Graph& a, const Graph& b) {
  if (a.vertices() != b.vertices()) {
    throw std::domain_error("neighboring graphs must share a vertex set");
  }
  std::map<std::pair<VertexId, VertexId>, double> diff;
  for (const WeightedEdge& e : a.edges()) diff[{e.u, e.v}] += e.weight;
  for (const WeightedEdge& e : b.edges()) diff[{e.u, e.v}] -= e.weight;
  int differing = 0;
  for (const auto& [pair, d] : diff) {
    if (d == 0.0) continue;
    if (std::abs(d) > 1.0 || ++differing > 1) return false;
  }
  return true;
}

}  // namespace dpgh
