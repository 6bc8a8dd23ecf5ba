#pragma once

// Minimum generating sets for cycles whose labels are squares of linear
// forms in x, y.

#include "splines/spline.hpp"

namespace splines {

/// The label (x + a y)^2.
struct QuadLabel {
  Rational a;
  Poly generator;

  explicit QuadLabel(const Rational& slope);
};

/// Linear form p x + q y whose square generates `label` (up to a unit), or
/// nothing if the label is not such a square.
std::optional<std::pair<Rational, Rational>> square_root_form(const Poly& label);

/// Invertible substitution x_i -> sum_j matrix[i][j] x_j applied to labels.
struct Substitution {
  std::vector<std::vector<Rational>> matrix;
  std::vector<std::vector<Rational>> inverse;
  bool is_identity() const;
};

struct NormalizedCycle {
  CycleGraph cycle;              // same ids and cyclic order, substituted labels
  std::vector<QuadLabel> labels; // per edge, in cycle order
  Substitution substitution;     // carries original labels to the new ones
};

/// Change coordinates so every label becomes (x + a y)^2 with a != 0.
/// Tries the identity, then x -> x + t y, y -> t x + (1 + t^2) y for
/// t = 1, 2, ... Throws UnsupportedInput for labels outside the class.
NormalizedCycle normalize_labels(const CycleGraph& c);

/// {1, (0, x a, g1 c), (0, y a, g2 c)} on the triangle v1 v2 v3 with labels
/// a = (x+a y)^2 on v1v2, b on v2v3, c on v3v1, where x a = f1 b + g1 c and
/// y a = f2 b + g2 c.
GeneratingSet mgs_triangle(const QuadLabel& a, const QuadLabel& b, const QuadLabel& c);

/// Explicit basis of a reduced cycle with labels (x+a_i y)^2, using the
/// window at `offset` (edges offset, offset+1, offset+2 pairwise distinct).
/// Generators are listed in the order 1, b^2, ..., b^n.
GeneratingSet mgs_reduced_cycle(const CycleGraph& c, std::size_t offset);

struct CycleGenerators {
  CycleGraph cycle;
  std::vector<std::vector<Poly>> generators;  // entries in cycle position order
};

/// Undo one reduction step: every generator takes at the new vertex its
/// value at the preceding vertex, and the indicator of the repeated label
/// at the new vertex is appended.
CycleGenerators reinsert_vertex(const CycleGenerators& b, const ReductionStep& step);

struct CycleOptions {
  std::size_t rotation_choice = 0;  // index into the valid windows of the reduced cycle
  std::size_t reduction_start = 0;  // scan start for the reduction
};

/// Full pipeline. One and two labels go to the general constructions;
/// three or more are normalized, reduced, solved, reinserted and mapped
/// back to the original coordinates.
GeneratingSet mgs_cycle_quadratic(const CycleGraph& c, const CycleOptions& options = {});

/// (1,0,n-1), (1,0,n-2,0,1) or (1,0,n-3,2) by label count.
std::vector<int> predicted_degree_sequence(int n, int label_count);

}  // namespace splines
