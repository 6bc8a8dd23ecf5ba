#pragma once

// Exact dense linear algebra over the rationals.

#include <optional>
#include <vector>

#include "splines/algebra.hpp"

namespace splines {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& m);

/// Exact kernel basis; empty iff the kernel is trivial.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

/// Some solution of m * x = rhs (free variables set to zero), or nothing if
/// the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs);

struct QuadraticDependence {
  Rational A, B, C;
};

/// Unique (A, B, C) with A(x+ay)^2 + B(x+by)^2 + C(x+cy)^2 = D(x+dy)^2;
/// a, b, c pairwise distinct. Re-certified by expansion.
QuadraticDependence solve_quadratic_dependence(Rational a, Rational b, Rational c, Rational d, Rational D);

struct CubicSplit {
  Rational A1, A2, B1, B2;
};

/// Unique (A1, A2, B1, B2) with
///   (A1 x + A2 y)(x+ay)^2 + (B1 x + B2 y)(x+by)^2 = (C1 x + C2 y)(x+cy)^2,
/// a != b. Re-certified by expansion.
CubicSplit solve_cubic_split(Rational a, Rational b, Rational c, Rational C1, Rational C2);

/// (x + a y)^2 in two variables.
Poly quad_label(const Rational& a);

}  // namespace splines
