#pragma once

// Brute-force dimension counts and span membership by exact linear algebra.

#include <optional>
#include <vector>

#include "splines/spline.hpp"

namespace splines {

/// Number of monomials of degree <= d in `nvars` variables (0 for d < 0).
long monomial_count(int nvars, int d);

/// Dimension over Q of the splines whose entries all have degree <= d.
long spline_space_dimension(const EdgeLabeledGraph& g, int d);

/// spline_space_dimension for d = 0..d_max in one pass.
std::vector<long> spline_space_dimensions(const EdgeLabeledGraph& g, int d_max);

/// Splines spanning the degree <= d part, read off the exact nullspace.
std::vector<Spline> spline_space_basis(const GraphPtr& g, int d);

/// Dimension of the splines over Q[x..]/(monomials of degree d+1), with
/// divisibility taken in that truncated ring.
long quotient_spline_dimension(const EdgeLabeledGraph& g, int d);

/// Polynomial coefficients r_i with p = sum r_i b_i, each r_i of degree at
/// most deg p - (lowest degree of b_i) + slack. Nothing if none exist.
std::optional<std::vector<Poly>> in_module_span(const GeneratingSet& b, const Spline& p, int slack = 0);

struct CertificationRow {
  int degree = 0;
  long predicted = 0;  // sum over generators of monomial_count(d - deg b)
  long actual = 0;     // spline_space_dimension
  long span_rank = 0;  // rank of {monomial * b} in degree <= d
  bool pass = false;
};

/// Per degree: the generator count prediction, the brute-force dimension
/// and the rank actually spanned must agree. Requires homogeneous
/// generators.
std::vector<CertificationRow> certify_basis(const GeneratingSet& b, int d_max = 6);

bool all_pass(const std::vector<CertificationRow>& rows);

}  // namespace splines
