#pragma once

// Edge-labeled graphs, cycles, and the combinatorial subroutines used by the
// generating-set constructions.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splines/algebra.hpp"

namespace splines {

using VertexId = std::string;

struct LabeledEdge {
  std::size_t u = 0;  // vertex indices, u < v
  std::size_t v = 0;
  Poly label;         // canonical (monic) generator
  std::optional<FactoredGen> factors;
};

/// Input form of an edge before canonicalization.
struct EdgeSpec {
  VertexId u;
  VertexId v;
  Poly label;
  std::optional<std::vector<Factor>> factors;
};

/// Finite simple graph whose edges carry principal-ideal generators.
/// Vertex order is the input order.
class EdgeLabeledGraph {
 public:
  EdgeLabeledGraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges, int nvars);

  int nvars() const { return nvars_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& id(std::size_t index) const { return vertices_.at(index); }
  std::size_t index_of(const VertexId& id) const;
  bool has_vertex(const VertexId& id) const { return index_.count(id) != 0; }

  const std::vector<LabeledEdge>& edges() const { return edges_; }
  /// Neighbors of a vertex in vertex order, with the connecting edge index.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;
  const Poly& label(std::size_t edge) const { return edges_.at(edge).label; }

  /// Edge specs that rebuild this graph (labels canonical, factors kept).
  std::vector<EdgeSpec> edge_specs() const;

 private:
  std::vector<VertexId> vertices_;
  std::map<VertexId, std::size_t> index_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
  int nvars_;
};

using GraphPtr = std::shared_ptr<const EdgeLabeledGraph>;

GraphPtr make_graph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges, int nvars);

/// Breadth-first order from the first vertex, neighbors in vertex order.
/// Every vertex after the first has an earlier neighbor.
std::vector<std::size_t> connectivity_order(const EdgeLabeledGraph& g);

bool is_connected(const EdgeLabeledGraph& g);

/// Vertex-index sets of the connected components, in order of first vertex.
std::vector<std::vector<std::size_t>> component_vertex_sets(const EdgeLabeledGraph& g);

/// Maximal connected induced subgraphs, in order of their first vertex.
std::vector<GraphPtr> components(const EdgeLabeledGraph& g);

/// Induced subgraph on the given vertex indices (kept in graph order).
GraphPtr induced_subgraph(const EdgeLabeledGraph& g, const std::vector<std::size_t>& vertices);

/// Vertex indices of v's component after deleting every edge labeled `label`.
std::set<std::size_t> component_after_label_deletion(const EdgeLabeledGraph& g, std::size_t v,
                                                     const Poly& label);

/// Distinct canonical labels in first-occurrence edge order.
std::vector<Poly> distinct_labels(const EdgeLabeledGraph& g);

/// A cycle v_0 v_1 ... v_{n-1} v_0. Edge i joins order[i] and order[i+1 mod n].
class CycleGraph {
 public:
  /// Wrap a graph that is a single cycle; the cyclic order starts at the
  /// first vertex and continues to its earlier-listed neighbor.
  explicit CycleGraph(GraphPtr graph);
  /// Build a cycle from ids in cyclic order and the labels of consecutive
  /// edges (labels[i] joins ids[i] and ids[i+1 mod n]).
  static CycleGraph from_sequence(const std::vector<VertexId>& ids, const std::vector<Poly>& labels);

  std::size_t size() const { return order_.size(); }
  const GraphPtr& graph() const { return graph_; }
  const std::vector<std::size_t>& order() const { return order_; }
  /// Graph vertex index of the i-th vertex around the cycle.
  std::size_t vertex(std::size_t i) const { return order_.at(i % order_.size()); }
  const VertexId& id(std::size_t i) const { return graph_->id(vertex(i)); }
  /// Label of edge i (between positions i and i+1).
  const Poly& edge_label(std::size_t i) const;
  std::vector<Poly> edge_labels() const;
  std::vector<VertexId> ids() const;

 private:
  CycleGraph(GraphPtr graph, std::vector<std::size_t> order);

  GraphPtr graph_;
  std::vector<std::size_t> order_;
};

struct ReductionStep {
  std::size_t position = 0;  // index the vertex occupied in the cycle it was removed from
  VertexId removed;
  Poly label;                // the repeated label on both of its edges
};

using ReductionLog = std::vector<ReductionStep>;

/// Remove vertices whose two edges carry the same label until none remain.
/// The scan starts at position `start` and restarts after each removal.
std::pair<CycleGraph, ReductionLog> reduce_cycle(const CycleGraph& c, std::size_t start = 0);

/// Undo one reduction step: insert the removed vertex back at its position.
CycleGraph insert_vertex(const CycleGraph& c, const ReductionStep& step);

bool is_reduced(const CycleGraph& c);

/// All offsets i where edges i, i+1, i+2 carry pairwise distinct labels.
std::vector<std::size_t> successive_distinct_windows(const CycleGraph& c);

/// First such offset, scanning from edge 0. Requires a reduced cycle with at
/// least three distinct labels.
std::size_t find_three_successive_distinct(const CycleGraph& c);

}  // namespace splines
