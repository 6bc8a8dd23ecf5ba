#pragma once

// C^1 splines on a pinwheel triangulation (one interior vertex) through the
// dual cycle.

#include <string>
#include <vector>

#include "splines/mgs_cycle.hpp"
#include "splines/oracle.hpp"

namespace splines {

/// Interior cell: the lines through `center` that carry the interior edges,
/// in cyclic order. Validated on construction.
class Pinwheel {
 public:
  /// Rays are linear forms in x, y (affine allowed) vanishing at the center.
  /// Throws UnsupportedInput for non-realizable geometry or r != 1.
  Pinwheel(std::array<Rational, 2> center, std::vector<Poly> rays, int r = 1);

  const std::array<Rational, 2>& center() const { return center_; }
  /// Ray forms translated so the center is the origin.
  const std::vector<Poly>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  int smoothness() const { return r_; }
  /// Two lines crossing at the center.
  bool singular() const;

 private:
  std::array<Rational, 2> center_;
  std::vector<Poly> rays_;
  int r_;
};

/// n-cycle t0 ... t(n-1); edge i (t_i t_{i+1}) carries the square of ray i+1.
CycleGraph dual_cycle(const Pinwheel& p);

/// (d+1)(d+2)/2, zero for negative d.
long m(int d);

struct DimReport {
  int n = 0;
  int d = 0;
  int r = 1;
  bool singular = false;
  long dimension = 0;
  std::string branch;
};

/// m_d + 2 m_{d-2} + m_{d-4} for a singular vertex (n = 4), otherwise
/// m_d + (n-3) m_{d-2} + 2 m_{d-3}.
DimReport pinwheel_dimension(int n, int d, bool singular);

/// Alternating two-label four-cycle.
bool is_singular_vertex(const CycleGraph& c);

/// Every label at most twice, never on adjacent edges, and at least three
/// labels unless the cycle is the alternating two-label four-cycle.
bool is_geometrically_realizable(const CycleGraph& c);

/// pinwheel_dimension(k, d, singular) - m(d).
long lower_bound_increment(int k, int d, bool singular);

struct PinwheelRow {
  int degree = 0;
  long predicted = 0;  // from the degree sequence of the constructed MGS
  long formula = 0;    // pinwheel_dimension
  long oracle = 0;     // spline_space_dimension of the dual cycle
  bool pass = false;
};

struct PinwheelReport {
  int n = 0;
  bool singular = false;
  std::vector<int> degree_sequence;
  std::vector<PinwheelRow> rows;
  bool pass() const;
};

PinwheelReport pinwheel_full_pipeline(const Pinwheel& p, int d_max = 6);

}  // namespace splines
