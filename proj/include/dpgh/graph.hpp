#ifndef DPGH_GRAPH_HPP_
#define DPGH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace dpgh {

// Opaque vertex label. The natural integer order is the canonical vertex
// order used everywhere a set has to be enumerated deterministically.
using VertexId = std::int64_t;

// Sorted, duplicate-free set of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  bool contains(VertexId v) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  VertexId front() const { return ids_.front(); }
  VertexId back() const { return ids_.back(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<VertexId>& ids() const { return ids_; }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool disjoint_from(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> ids_;
};

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Neighbor entry in the index-based adjacency of a Graph.
struct Arc {
  std::size_t to;
  double weight;
};

// Immutable weighted undirected graph with strictly positive finite edge
// weights. Parallel edges are merged by summation and zero-weight pairs are
// dropped on construction; edges are stored once with u < v.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on self-loops, unknown endpoints, negative
  // or non-finite weights, and duplicate vertex labels.
  Graph(std::vector<VertexId> vertices, std::span<const WeightedEdge> edges);
  Graph(std::vector<VertexId> vertices,
        std::initializer_list<WeightedEdge> edges);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  bool contains(VertexId v) const { return vertices_.contains(v); }
  // Position of v in the vertex order; throws std::domain_error if absent.
  std::size_t index_of(VertexId v) const;
  VertexId vertex_at(std::size_t index) const { return vertices_.ids()[index]; }
  const std::vector<Arc>& arcs(std::size_t index) const {
    return adjacency_[index];
  }

  // Weight of the unordered pair {u, v}; 0 when absent.
  double weight(VertexId u, VertexId v) const;
  double total_weight() const;
  // Smallest label strictly greater than every vertex (0 for the empty graph).
  VertexId fresh_label() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  VertexSet vertices_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<Arc>> adjacency_;
};

// Accumulates edges (summing parallel ones) before producing a Graph.
class GraphBuilder {
 public:
  void add_vertex(VertexId v) { vertices_.push_back(v); }
  // Adds w onto the pair {u, v}. w == 0 is accepted and has no effect.
  void add_edge(VertexId u, VertexId v, double w);
  Graph build() &&;

 private:
  std::vector<VertexId> vertices_;
  std::vector<WeightedEdge> edges_;
};

// A vertex subset together with the weight of the edges leaving it.
struct CutSide {
  VertexSet side;
  double value = 0.0;
};

// w(∂S): total weight of edges with exactly one endpoint in S.
// Throws std::domain_error if S has a vertex outside G.
double cut_weight(const Graph& g, const VertexSet& s);

// Builds a CutSide, checking ∅ ⊊ S ⊊ V(G) (std::domain_error otherwise).
CutSide make_cut_side(const Graph& g, VertexSet side);

// Maps vertices of the original graph onto the contracted graph: each
// contracted set goes to its label, every other vertex to itself.
class ContractionMap {
 public:
  ContractionMap() = default;
  explicit ContractionMap(std::vector<std::pair<VertexSet, VertexId>> groups)
      : groups_(std::move(groups)) {}

  VertexId operator()(VertexId v) const;
  // Original vertices that map to `image` (a label expands to its set).
  VertexSet preimage(VertexId image) const;
  // Expands a vertex subset of the contracted graph back to original vertices.
  VertexSet expand(const VertexSet& contracted_side) const;
  const std::vector<std::pair<VertexSet, VertexId>>& groups() const {
    return groups_;
  }

 private:
  std::vector<std::pair<VertexSet, VertexId>> groups_;
};

struct Contraction {
  Graph graph;
  ContractionMap map;
};

// Replaces X by a single vertex `label` whose weight to each v outside X is
// Σ_{x∈X} w(x, v). `label` may be a member of X but no other vertex of G.
Contraction contract(const Graph& g, const VertexSet& x, VertexId label);

// Contracts several pairwise disjoint sets at once.
Contraction contract_sets(const Graph& g,
                          std::vector<std::pair<VertexSet, VertexId>> groups);

// True iff G and G' differ on at most one vertex pair, by at most 1.
// Throws std::domain_error if the vertex sets differ.
bool are_neighboring(const Graph& a, const Graph& b);

}  // namespace dpgh

#endif  // DPGH_GRAPH_HPP_
