// Factored generators: exact factorization for univariate and bivariate
// homogeneous polynomials, and lcm over factor sets.

#include <algorithm>
#include <bit>

#include "splines/algebra.hpp"

namespace splines {

namespace {

// Dense univariate polynomial, coefficient i multiplies t^i.
using Dense = std::vector<Rational>;

void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Dense& f) { return static_cast<int>(f.size()) - 1; }

Dense make_monic(Dense f) {
  trim(f);
  if (f.empty()) return f;
  Rational inv = 1 / f.back();
  for (auto& c : f) c *= inv;
  return f;
}

// Returns (quotient, remainder).
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  trim(a);
  Dense q(std::max(0, deg(a) - deg(b) + 1));
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (int i = 0; i <= deg(b); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Dense derivative(const Dense& f) {
  Dense d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Dense exact_quotient(const Dense& a, const Dense& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw CertificationError("univariate division was expected to be exact");
  return q;
}

Rational evaluate(const Dense& f, const Rational& t) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  Integer limit = sqrt(n);
  if (limit > 10000000)
    throw UnsupportedInput("coefficients too large for rational-root search; supply factors explicitly");
  for (Integer d = 1; d <= limit; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      Integer other = n / d;
      if (other != d) large.push_back(other);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

struct DenseFactor {
  Dense poly;  // monic
  int multiplicity;
};

// Monic factorization of a univariate polynomial: linear factors over Q
// first, then Yun square-free blocks of what remains.
std::vector<DenseFactor> factor_dense(Dense f) {
  std::vector<DenseFactor> out;
  f = make_monic(f);
  if (deg(f) <= 0) return out;

  int zero_mult = 0;
  while (f.front() == 0) {
    f.erase(f.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.push_back({Dense{0, 1}, zero_mult});

  if (deg(f) >= 1) {
    Integer den = 1;
    for (const auto& c : f) den = lcm(den, c.get_den());
    std::vector<Integer> ints;
    for (const auto& c : f) {
      Rational scaled = c * den;
      ints.push_back(scaled.get_num());
    }
    const auto ps = positive_divisors(ints.front());
    const auto qs = positive_divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int sign : {1, -1}) {
          Rational r(sign * p, q);
          r.canonicalize();
          candidates.push_back(r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (deg(f) >= 1 && evaluate(f, r) == 0) {
        f = exact_quotient(f, Dense{-r, 1});
        ++mult;
      }
      if (mult > 0) out.push_back({Dense{-r, 1}, mult});
    }
  }

  if (deg(f) >= 1) {
    // Yun's square-free decomposition.
    Dense fp = derivative(f);
    Dense a = gcd(f, fp);
    Dense b = exact_quotient(f, a);
    Dense c = exact_quotient(fp, a);
    Dense d = c;
    {
      Dense bp = derivative(b);
      d.resize(std::max(d.size(), bp.size()));
      for (std::size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
      trim(d);
    }
    int i = 1;
    while (deg(b) >= 1) {
      Dense g = gcd(b, d);
      if (deg(g) >= 1) out.push_back({g, i});
      b = exact_quotient(b, g);
      c = exact_quotient(d, g);
      Dense bp = derivative(b);
      d = c;
      d.resize(std::max(d.size(), bp.size()));
      for (std::size_t k = 0; k < bp.size(); ++k) d[k] -= bp[k];
      trim(d);
      ++i;
    }
  }
  return out;
}

Dense to_dense_univariate(const Poly& p, int var) {
  Dense f(std::max(0, p.degree_in(var)) + 1);
  for (const auto& [e, c] : p.terms()) f[e[var]] = c;
  trim(f);
  return f;
}

// Dehomogenize a homogeneous polynomial in variables (hi, lo) by lo = 1.
Dense dehomogenize(const Poly& p, int hi) {
  return to_dense_univariate(p, hi);
}

Poly from_dense(const Dense& f, int nvars, int var) {
  Poly p(nvars);
  for (std::size_t i = 0; i < f.size(); ++i) {
    Exponents e{};
    e[var] = static_cast<std::uint16_t>(i);
    p += Poly::monomial(nvars, e, f[i]);
  }
  return p;
}

Poly homogenize(const Dense& f, int nvars, int hi, int lo) {
  Poly p(nvars);
  const int d = deg(f);
  for (int i = 0; i <= d; ++i) {
    Exponents e{};
    e[hi] = static_cast<std::uint16_t>(i);
    e[lo] = static_cast<std::uint16_t>(d - i);
    p += Poly::monomial(nvars, e, f[i]);
  }
  return p;
}

struct Shape {
  enum class Kind { constant, univariate, homogeneous_bivariate, other } kind = Kind::other;
  int hi = -1;  // the single variable, or the larger one of the pair
  int lo = -1;
};

Shape shape_of(const Poly& p) {
  const unsigned mask = p.variable_mask();
  const int count = std::popcount(mask);
  if (count == 0) return {Shape::Kind::constant};
  if (count == 1) return {Shape::Kind::univariate, std::countr_zero(mask)};
  if (count == 2 && homogeneous_degree(p).is_homogeneous()) {
    const int hi = std::countr_zero(mask);
    const int lo = std::countr_zero(mask & ~(1u << hi));
    return {Shape::Kind::homogeneous_bivariate, hi, lo};
  }
  return {};
}

// gcd of two monic factors when both fit a shape we can handle; otherwise
// the factors are taken as coprime (factor invariant: irreducible or our own
// square-free blocks, which are always in a handled shape).
std::optional<Poly> try_gcd(const Poly& a, const Poly& b) {
  if (a == b) return a;
  const Shape sa = shape_of(a);
  const Shape sb = shape_of(b);
  const int n = a.nvars();
  if (sa.kind == Shape::Kind::univariate && sb.kind == Shape::Kind::univariate && sa.hi == sb.hi) {
    Dense g = gcd(to_dense_univariate(a, sa.hi), to_dense_univariate(b, sb.hi));
    return from_dense(g, n, sa.hi).monic();
  }
  auto as_pair = [](const Shape& s, const Poly& p) -> std::optional<std::pair<int, int>> {
    if (s.kind == Shape::Kind::homogeneous_bivariate) return std::pair{s.hi, s.lo};
    (void)p;
    return std::nullopt;
  };
  auto pa = as_pair(sa, a);
  auto pb = as_pair(sb, b);
  // A lone variable (e.g. y) is homogeneous in any pair containing it.
  if (!pa && sa.kind == Shape::Kind::univariate && a.total_degree() == a.low_degree() && pb &&
      (sa.hi == pb->first || sa.hi == pb->second))
    pa = pb;
  if (!pb && sb.kind == Shape::Kind::univariate && b.total_degree() == b.low_degree() && pa &&
      (sb.hi == pa->first || sb.hi == pa->second))
    pb = pa;
  if (pa && pb && *pa == *pb) {
    const auto [hi, lo] = *pa;
    Dense da = dehomogenize(a, hi);
    Dense db = dehomogenize(b, hi);
    const int lo_a = a.total_degree() - deg(da);
    const int lo_b = b.total_degree() - deg(db);
    Dense g = gcd(da, db);
    Poly result = homogenize(g, n, hi, lo) * Poly::variable(n, lo).pow(std::min(lo_a, lo_b));
    return result.monic();
  }
  return std::nullopt;
}

}  // namespace

Poly FactoredGen::expand() const {
  Poly p = Poly::constant(nvars, unit);
  for (const auto& f : factors) p = p * f.poly.pow(f.multiplicity);
  return p;
}

Poly FactoredGen::monic_expansion() const { return expand().monic(); }

FactoredGen factor_generator(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  const int n = p.nvars();
  FactoredGen out;
  out.nvars = n;
  out.unit = p.leading_coefficient();
  const Shape s = shape_of(p);
  switch (s.kind) {
    case Shape::Kind::constant:
      return out;
    case Shape::Kind::univariate: {
      for (const auto& f : factor_dense(to_dense_univariate(p, s.hi)))
        out.factors.push_back({from_dense(f.poly, n, s.hi).monic(), f.multiplicity});
      break;
    }
    case Shape::Kind::homogeneous_bivariate: {
      Dense u = dehomogenize(p, s.hi);
      const int lo_mult = p.total_degree() - deg(u);
      for (const auto& f : factor_dense(u))
        out.factors.push_back({homogenize(f.poly, n, s.hi, s.lo).monic(), f.multiplicity});
      if (lo_mult > 0) out.factors.push_back({Poly::variable(n, s.lo), lo_mult});
      break;
    }
    case Shape::Kind::other:
      throw UnsupportedInput("cannot factor " + p.to_string() +
                             ": only univariate or homogeneous bivariate generators are supported");
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return b.poly < a.poly; });
  if (out.expand() != p) throw CertificationError("factorization does not reproduce " + p.to_string());
  return out;
}

FactoredGen factored_from_parts(const Poly& p, const std::vector<Factor>& parts) {
  if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  FactoredGen out;
  out.nvars = p.nvars();
  for (const auto& part : parts) {
    if (part.multiplicity < 1) throw PreconditionError("factor multiplicity must be positive");
    if (part.poly.is_constant()) throw PreconditionError("constant factors are absorbed in the unit");
    Poly m = part.poly.monic();
    auto it = std::find_if(out.factors.begin(), out.factors.end(),
                           [&](const Factor& f) { return f.poly == m; });
    if (it != out.factors.end())
      it->multiplicity += part.multiplicity;
    else
      out.factors.push_back({m, part.multiplicity});
  }
  out.unit = 1;
  Poly product = out.expand();
  out.unit = p.leading_coefficient() / product.leading_coefficient();
  if (out.expand() != p)
    throw PreconditionError("supplied factors do not multiply to " + p.to_string());
  return out;
}

FactoredGen lcm_gen(const FactoredGen& f, const FactoredGen& g) {
  if (f.nvars != g.nvars) throw PreconditionError("variable-count mismatch in lcm");
  // Each entry carries its multiplicity in f and in g.
  struct Entry {
    Poly poly;
    int in_f;
    int in_g;
  };
  std::vector<Entry> entries;
  auto add = [&](const Poly& p, int mf, int mg) {
    for (auto& e : entries)
      if (e.poly == p) {
        e.in_f += mf;
        e.in_g += mg;
        return;
      }
    entries.push_back({p, mf, mg});
  };
  for (const auto& x : f.factors) add(x.poly, x.multiplicity, 0);
  for (const auto& x : g.factors) add(x.poly, 0, x.multiplicity);

  // Coprime refinement: split any two entries that share a nontrivial gcd.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < entries.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < entries.size() && !changed; ++j) {
        auto common = try_gcd(entries[i].poly, entries[j].poly);
        if (!common || common->is_constant()) continue;
        Entry a = entries[i];
        Entry b = entries[j];
        entries.erase(entries.begin() + static_cast<long>(j));
        entries.erase(entries.begin() + static_cast<long>(i));
        Poly ra = *divide_exact(a.poly, *common);
        Poly rb = *divide_exact(b.poly, *common);
        add(*common, a.in_f + b.in_f, a.in_g + b.in_g);
        if (!ra.is_constant()) add(ra.monic(), a.in_f, a.in_g);
        if (!rb.is_constant()) add(rb.monic(), b.in_f, b.in_g);
        changed = true;
      }
    }
  }

  FactoredGen out;
  out.nvars = f.nvars;
  out.unit = 1;
  for (const auto& e : entries) out.factors.push_back({e.poly, std::max(e.in_f, e.in_g)});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return b.poly < a.poly; });
  return out;
}

}  // namespace splines
