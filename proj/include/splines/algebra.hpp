#pragma once

// Exact polynomial arithmetic over the rationals.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splines/errors.hpp"

namespace splines {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVariables = 4;

using Exponents = std::array<std::uint16_t, kMaxVariables>;

int total_degree(const Exponents& e);

/// Graded lexicographic order with x > y > z > w; "greater" sorts the
/// leading term first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in up to four variables x, y, z, w. Zero coefficients
/// are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit Poly(int nvars = 2);

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, const Exponents& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  /// Smallest total degree of a term; -1 for the zero polynomial.
  int low_degree() const;
  /// Highest exponent of variable `index`; -1 for zero.
  int degree_in(int index) const;
  /// Bit i set iff variable i occurs.
  unsigned variable_mask() const;

  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned e) const;

  /// Drop every term of total degree > max_degree.
  Poly truncated(int max_degree) const;
  Poly homogeneous_part(int degree) const;
  /// Divide by the leading coefficient; zero stays zero.
  Poly monic() const;
  /// Same polynomial viewed in a ring with more (or equally many) variables.
  Poly widened(int nvars) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator<(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

 private:
  void add_term(const Exponents& e, const Rational& c);
  void require_same_ring(const Poly& other) const;

  int nvars_;
  TermMap terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Returns r with p = q * r, or nothing if q does not divide p.
std::optional<Poly> divide_exact(const Poly& p, const Poly& q);

/// Homogeneity report: the zero polynomial is compatible with any degree.
struct HomogeneousDegree {
  enum class Kind { zero, homogeneous, mixed };
  Kind kind = Kind::zero;
  int degree = 0;

  bool is_zero() const { return kind == Kind::zero; }
  bool is_homogeneous() const { return kind == Kind::homogeneous; }
  std::optional<int> value() const {
    return kind == Kind::homogeneous ? std::optional<int>(degree) : std::nullopt;
  }
};
HomogeneousDegree homogeneous_degree(const Poly& p);

/// Replace x_i by sum_j matrix[i][j] x_j + shift[i]. `matrix` must be square
/// of size p.nvars() and invertible.
Poly substitute_linear(const Poly& p, const std::vector<std::vector<Rational>>& matrix,
                       const std::vector<Rational>& shift = {});

/// Inverse of a small square rational matrix; throws on singular input.
std::vector<std::vector<Rational>> invert_small(const std::vector<std::vector<Rational>>& m);

struct Factor {
  Poly poly;
  int multiplicity = 1;
};

/// A principal-ideal generator kept as unit * prod factor^multiplicity.
/// Factors are monic and pairwise distinct.
struct FactoredGen {
  Rational unit = 1;
  std::vector<Factor> factors;
  int nvars = 2;

  Poly expand() const;
  /// The generator normalized to a monic representative.
  Poly monic_expansion() const;
};

/// Factor a univariate polynomial or a homogeneous polynomial in two
/// variables: rational linear factors are extracted exactly, and what is
/// left is split into square-free blocks. Other shapes throw
/// UnsupportedInput.
FactoredGen factor_generator(const Poly& p);

/// Build a FactoredGen from caller-supplied factors, checking that the
/// product matches `p` up to a unit.
FactoredGen factored_from_parts(const Poly& p, const std::vector<Factor>& parts);

FactoredGen lcm_gen(const FactoredGen& f, const FactoredGen& g);

/// Affine linear form sum coefficients[i] x_i + constant.
struct LinForm {
  std::vector<Rational> coefficients;
  Rational constant = 0;

  Poly to_poly(int nvars) const;
  bool is_homogeneous() const { return constant == 0; }
  /// Throws PreconditionError unless p has degree exactly 1.
  static LinForm from_poly(const Poly& p);
};

/// Parse the polynomial text grammar: rational literals, variables x y z w,
/// + - * ^, parentheses, juxtaposition as multiplication.
Poly parse_poly(std::string_view text, int nvars);

/// 1 + index of the highest variable mentioned in `text` (0 if none).
int variables_used(std::string_view text);

std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace splines
