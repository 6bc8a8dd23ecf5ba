#include "splines/linsolve.hpp"

#include <algorithm>

namespace splines {

namespace {

// Fraction-free echelon form. Each row is first scaled to integers (which
// leaves both row space and solution set unchanged), then Bareiss
// elimination runs with the first nonzero entry of each column as pivot.
struct Echelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Integer>> a;
  std::vector<std::size_t> pivot_cols;
};

Echelon bareiss(const RatMatrix& m, const std::vector<Rational>* rhs) {
  Echelon e;
  e.rows = m.rows();
  e.cols = m.cols() + (rhs ? 1 : 0);
  e.a.assign(e.rows, std::vector<Integer>(e.cols));
  for (std::size_t r = 0; r < e.rows; ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) den = lcm(den, m(r, c).get_den());
    if (rhs) den = lcm(den, (*rhs)[r].get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational v = m(r, c) * den;
      e.a[r][c] = v.get_num();
    }
    if (rhs) {
      Rational v = (*rhs)[r] * den;
      e.a[r][m.cols()] = v.get_num();
    }
  }

  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < e.cols && row < e.rows; ++col) {
    std::size_t piv = row;
    while (piv < e.rows && e.a[piv][col] == 0) ++piv;
    if (piv == e.rows) continue;
    std::swap(e.a[piv], e.a[row]);
    const Integer& p = e.a[row][col];
    for (std::size_t i = row + 1; i < e.rows; ++i) {
      auto& ri = e.a[i];
      const Integer f = ri[col];
      for (std::size_t j = col + 1; j < e.cols; ++j) {
        ri[j] = p * ri[j] - f * e.a[row][j];
        mpz_divexact(ri[j].get_mpz_t(), ri[j].get_mpz_t(), prev.get_mpz_t());
      }
      ri[col] = 0;
    }
    prev = p;
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

// Back substitution on the echelon rows for the given free-variable values.
std::vector<Rational> back_substitute(const Echelon& e, std::size_t nvars, std::vector<Rational> x,
                                      bool with_rhs) {
  for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
    const std::size_t pc = e.pivot_cols[r];
    Rational acc = with_rhs ? Rational(e.a[r][nvars]) : Rational(0);
    for (std::size_t j = pc + 1; j < nvars; ++j)
      if (e.a[r][j] != 0 && x[j] != 0) acc -= Rational(e.a[r][j]) * x[j];
    x[pc] = acc / Rational(e.a[r][pc]);
  }
  return x;
}

}  // namespace

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw PreconditionError("dimension mismatch in matrix-vector product");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

std::size_t rank(const RatMatrix& m) { return bareiss(m, nullptr).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
  const Echelon e = bareiss(m, nullptr);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols());
    x[free] = 1;
    basis.push_back(back_substitute(e, m.cols(), std::move(x), false));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_linear(const RatMatrix& m, const std::vector<Rational>& rhs) {
  if (rhs.size() != m.rows()) throw PreconditionError("right-hand side length does not match row count");
  const Echelon e = bareiss(m, &rhs);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  return back_substitute(e, m.cols(), std::vector<Rational>(m.cols()), true);
}

Poly quad_label(const Rational& a) {
  Poly l = Poly::variable(2, 0) + Poly::variable(2, 1).scaled(a);
  return l * l;
}

QuadraticDependence solve_quadratic_dependence(Rational a, Rational b, Rational c, Rational d, Rational D) {
  for (Rational* r : {&a, &b, &c, &d, &D}) r->canonicalize();
  if (a == b || b == c || a == c)
    throw PreconditionError("quadratic dependence needs pairwise distinct a, b, c");
  // Coefficients of x^2, xy, y^2.
  RatMatrix m{{1, 1, 1}, {2 * a, 2 * b, 2 * c}, {a * a, b * b, c * c}};
  const std::vector<Rational> rhs{D, 2 * d * D, d * d * D};
  auto sol = solve_linear(m, rhs);
  if (!sol) throw CertificationError("quadratic dependence system is inconsistent");
  QuadraticDependence out{(*sol)[0], (*sol)[1], (*sol)[2]};
  const Poly lhs = quad_label(a).scaled(out.A) + quad_label(b).scaled(out.B) + quad_label(c).scaled(out.C);
  if (lhs != quad_label(d).scaled(D)) throw CertificationError("quadratic dependence failed re-expansion");
  return out;
}

CubicSplit solve_cubic_split(Rational a, Rational b, Rational c, Rational C1, Rational C2) {
  for (Rational* r : {&a, &b, &c, &C1, &C2}) r->canonicalize();
  if (a == b) throw PreconditionError("cubic split needs a != b");
  // Coefficients of x^3, x^2 y, x y^2, y^3.
  RatMatrix m{{1, 0, 1, 0},
              {2 * a, 1, 2 * b, 1},
              {a * a, 2 * a, b * b, 2 * b},
              {0, a * a, 0, b * b}};
  const std::vector<Rational> rhs{C1, 2 * c * C1 + C2, c * c * C1 + 2 * c * C2, c * c * C2};
  auto sol = solve_linear(m, rhs);
  if (!sol) throw CertificationError("cubic split system is inconsistent");
  CubicSplit out{(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
  const Poly x = Poly::variable(2, 0);
  const Poly y = Poly::variable(2, 1);
  const Poly lhs = (x.scaled(out.A1) + y.scaled(out.A2)) * quad_label(a) +
                   (x.scaled(out.B1) + y.scaled(out.B2)) * quad_label(b);
  const Poly rhs_poly = (x.scaled(C1) + y.scaled(C2)) * quad_label(c);
  if (lhs != rhs_poly) throw CertificationError("cubic split failed re-expansion");
  return out;
}

}  // namespace splines
