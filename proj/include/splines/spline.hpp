#pragma once

// Splines on an edge-labeled graph and generating sets of the spline module.

#include <optional>
#include <vector>

#include "splines/graph.hpp"

namespace splines {

/// A vertex labeling satisfying the GKM condition: for every edge uv the
/// difference p_u - p_v is divisible by the edge label. Checked on
/// construction, so every Spline value is valid.
class Spline {
 public:
  /// Throws PreconditionError listing the violating edges.
  Spline(GraphPtr graph, std::vector<Poly> entries);

  static Spline zero(GraphPtr graph);
  static Spline constant(GraphPtr graph, const Rational& c);
  /// `value` on the given vertex set, zero elsewhere. GKM checked.
  static Spline indicator(GraphPtr graph, const std::vector<std::size_t>& support, const Poly& value);

  const GraphPtr& graph() const { return graph_; }
  const std::vector<Poly>& entries() const { return entries_; }
  const Poly& at(std::size_t v) const { return entries_.at(v); }
  const Poly& at(const VertexId& id) const { return entries_.at(graph_->index_of(id)); }

  bool is_zero() const;
  /// Common homogeneous degree of the nonzero entries; nothing if they are
  /// mixed or the spline is zero.
  std::optional<int> homogeneous_degree() const;
  /// Largest total degree among entries (-1 for zero).
  int max_degree() const;
  /// Smallest total degree among the terms of nonzero entries (-1 for zero).
  int low_degree() const;

  friend bool operator==(const Spline& a, const Spline& b);

 private:
  struct Unchecked {};
  Spline(GraphPtr graph, std::vector<Poly> entries, Unchecked);
  friend Spline add(const Spline&, const Spline&);
  friend Spline multiply(const Spline&, const Spline&);
  friend Spline scalar_mul(const Poly&, const Spline&);

  GraphPtr graph_;
  std::vector<Poly> entries_;
};

struct GkmViolation {
  std::size_t edge = 0;
  VertexId u, v;
  Poly difference;
  Poly label;
};

struct GkmResult {
  std::optional<Spline> spline;
  std::vector<GkmViolation> violations;
  bool ok() const { return spline.has_value(); }
};

/// Check the GKM condition; entries are given in graph vertex order.
GkmResult verify_gkm(const GraphPtr& graph, const std::vector<Poly>& entries);

Spline add(const Spline& p, const Spline& q);
Spline multiply(const Spline& p, const Spline& q);
Spline scalar_mul(const Poly& r, const Spline& p);

/// Ordered generators over one graph, with the vertex ordering they were
/// built for (empty when no construction ordering applies).
class GeneratingSet {
 public:
  GeneratingSet(GraphPtr graph, std::vector<Spline> generators, std::vector<std::size_t> ordering = {});

  const GraphPtr& graph() const { return graph_; }
  const std::vector<Spline>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const Spline& operator[](std::size_t i) const { return generators_.at(i); }
  const std::vector<std::size_t>& ordering() const { return ordering_; }
  /// Homogeneous degree per generator (nothing for mixed or zero).
  const std::vector<std::optional<int>>& degrees() const { return degrees_; }

 private:
  GraphPtr graph_;
  std::vector<Spline> generators_;
  std::vector<std::size_t> ordering_;
  std::vector<std::optional<int>> degrees_;
};

/// Count of generators per degree, trailing zeros trimmed. Throws
/// PreconditionError naming the first non-homogeneous generator.
std::vector<int> degree_sequence(const GeneratingSet& b);

/// Position (in `ordering`) of the first vertex where the spline is nonzero.
std::optional<std::size_t> pivot(const Spline& s, const std::vector<std::size_t>& ordering);

/// True iff every generator is nonzero and the pivots under `ordering` are
/// pairwise distinct, i.e. the generator matrix can be arranged triangular
/// with nonzero diagonal.
bool is_triangular(const GeneratingSet& b, const std::vector<std::size_t>& ordering);

/// Assemble component generating sets into one over `whole`, extending each
/// generator by zero. Components must be vertex-disjoint.
GeneratingSet direct_sum_mgs(const GraphPtr& whole, const std::vector<GeneratingSet>& parts);

/// Move a generating set onto another graph with the same vertex ids and
/// labels (e.g. a rebuilt copy in a different vertex order). GKM re-checked.
GeneratingSet transfer(const GeneratingSet& b, const GraphPtr& target);

}  // namespace splines
