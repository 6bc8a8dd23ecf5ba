#include "splines/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace splines {

namespace {

const char kVariableNames[kMaxVariables] = {'x', 'y', 'z', 'w'};

void check_nvars(int nvars) {
  if (nvars < 1 || nvars > kMaxVariables)
    throw PreconditionError("variable count must be in 1..4, got " + std::to_string(nvars));
}

}  // namespace

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponents{}, c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw PreconditionError("variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(nvars, e, 1);
}

Poly Poly::monomial(int nvars, const Exponents& e, const Rational& c) {
  Poly p(nvars);
  for (int i = nvars; i < kMaxVariables; ++i)
    if (e[i] != 0) throw PreconditionError("monomial uses a variable outside the ring");
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return splines::total_degree(terms_.begin()->first);
}

int Poly::low_degree() const {
  if (terms_.empty()) return -1;
  return splines::total_degree(terms_.rbegin()->first);
}

int Poly::degree_in(int index) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[index]);
  return d;
}

unsigned Poly::variable_mask() const {
  unsigned mask = 0;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) mask |= 1u << i;
  return mask;
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_same_ring(const Poly& other) const {
  if (nvars_ != other.nvars_)
    throw PreconditionError("variable-count mismatch: " + std::to_string(nvars_) + " vs " +
                            std::to_string(other.nvars_));
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw PreconditionError("variable-count mismatch in product");
  Poly r(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e{};
      for (int i = 0; i < kMaxVariables; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      Rational c = ca * cb;
      r.add_term(e, c);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  Rational k(c);
  k.canonicalize();
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= k;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly Poly::truncated(int max_degree) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (splines::total_degree(e) <= max_degree) r.terms_.emplace(e, c);
  return r;
}

Poly Poly::homogeneous_part(int degree) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (splines::total_degree(e) == degree) r.terms_.emplace(e, c);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return scaled(inv);
}

Poly Poly::widened(int nvars) const {
  if (nvars < nvars_) {
    if ((variable_mask() >> nvars) != 0)
      throw PreconditionError("cannot narrow a polynomial that uses the dropped variables");
  }
  Poly r(nvars);
  r.terms_ = terms_;
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? '-' : '+');
    }
    first = false;
    const bool is_const = splines::total_degree(e) == 0;
    bool need_star = false;
    if (is_const || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << '*';
      out << kVariableNames[i];
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

bool operator==(const Poly& a, const Poly& b) {
  return a.nvars_ == b.nvars_ && a.terms_.size() == b.terms_.size() &&
         std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const auto& l, const auto& r) { return l.first == r.first && l.second == r.second; });
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  GradedLexGreater greater;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return greater(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (p.nvars() != q.nvars()) throw PreconditionError("variable-count mismatch in division");
  Poly quotient(p.nvars());
  Poly rest = p;
  const Exponents& lead = q.leading_exponents();
  const Rational& lead_c = q.leading_coefficient();
  while (!rest.is_zero()) {
    const Exponents& e = rest.leading_exponents();
    Exponents shift{};
    for (int i = 0; i < kMaxVariables; ++i) {
      if (e[i] < lead[i]) return std::nullopt;
      shift[i] = static_cast<std::uint16_t>(e[i] - lead[i]);
    }
    Rational c = rest.leading_coefficient() / lead_c;
    Poly step = Poly::monomial(p.nvars(), shift, c);
    quotient += step;
    rest -= step * q;
  }
  return quotient;
}

HomogeneousDegree homogeneous_degree(const Poly& p) {
  if (p.is_zero()) return {};
  const int hi = p.total_degree();
  if (p.low_degree() != hi) return {HomogeneousDegree::Kind::mixed, 0};
  return {HomogeneousDegree::Kind::homogeneous, hi};
}

std::vector<std::vector<Rational>> invert_small(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw PreconditionError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw PreconditionError("singular substitution matrix");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

Poly substitute_linear(const Poly& p, const std::vector<std::vector<Rational>>& matrix,
                       const std::vector<Rational>& shift) {
  const int n = p.nvars();
  if (static_cast<int>(matrix.size()) != n)
    throw PreconditionError("substitution matrix size does not match the variable count");
  if (!shift.empty() && static_cast<int>(shift.size()) != n)
    throw PreconditionError("shift vector size does not match the variable count");
  invert_small(matrix);  // throws on singular input

  std::vector<Poly> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    Poly img = shift.empty() ? Poly(n) : Poly::constant(n, shift[i]);
    for (int j = 0; j < n; ++j) img += Poly::variable(n, j).scaled(matrix[i][j]);
    images.push_back(std::move(img));
  }
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](int i, int k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(n, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Poly result(n);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[i] != 0) term = term * power(i, e[i]);
    result += term;
  }
  return result;
}

Poly LinForm::to_poly(int nvars) const {
  Poly p = Poly::constant(nvars, constant);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    p += Poly::variable(nvars, static_cast<int>(i)).scaled(coefficients[i]);
  }
  return p;
}

LinForm LinForm::from_poly(const Poly& p) {
  if (p.total_degree() != 1) throw PreconditionError("not a nonconstant linear form: " + p.to_string());
  LinForm form;
  form.coefficients.assign(p.nvars(), 0);
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) == 0) {
      form.constant = c;
      continue;
    }
    for (int i = 0; i < p.nvars(); ++i)
      if (e[i] == 1) form.coefficients[i] = c;
  }
  return form;
}

}  // namespace splines
