#include "splines/oracle.hpp"

#include <map>

#include "splines/linsolve.hpp"

namespace splines {

namespace {

// All exponent vectors in `nvars` variables of total degree exactly d.
std::vector<Exponents> monomials_of_degree(int nvars, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents e{};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      e[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = static_cast<std::uint16_t>(k);
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::vector<Exponents> monomials_up_to(int nvars, int d) {
  std::vector<Exponents> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (int i = 0; i < kMaxVariables; ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

// Assigns row numbers to exponent vectors on first use.
struct RowIndex {
  std::map<Exponents, std::size_t> rows;
  std::size_t operator()(const Exponents& e) { return rows.emplace(e, rows.size()).first->second; }
};

struct Entry {
  std::size_t row, col;
  Rational value;
};

RatMatrix assemble(std::size_t rows, std::size_t cols, const std::vector<Entry>& entries) {
  RatMatrix m(rows, cols);
  for (const auto& e : entries) m(e.row, e.col) += e.value;
  return m;
}

// Splines with vertex entries in span(vertex_monos); on edge e the
// difference must equal q * label with q in span(witness_monos(e)), and
// product terms of degree > cutoff are discarded (cutoff < 0: none).
// Returns the dimension of the projection of the solution space onto the
// vertex coordinates: nullity of the whole system minus the witnesses that
// solve the homogeneous edge equations on their own.
template <class WitnessFn>
long projected_dimension(const EdgeLabeledGraph& g, const std::vector<Exponents>& vertex_monos,
                         WitnessFn witness_monos, int cutoff) {
  const std::size_t n = g.vertex_count();
  const std::size_t vm = vertex_monos.size();
  std::size_t cols = n * vm;
  std::vector<Entry> entries;
  std::size_t row_base = 0;
  long witness_nullity = 0;
  for (const auto& edge : g.edges()) {
    RowIndex rows;
    std::vector<Entry> local;
    for (std::size_t k = 0; k < vm; ++k) {
      const std::size_t r = rows(vertex_monos[k]);
      local.push_back({r, edge.u * vm + k, 1});
      local.push_back({r, edge.v * vm + k, -1});
    }
    const auto wm = witness_monos(edge.label);
    std::vector<Entry> witness_only;
    for (std::size_t k = 0; k < wm.size(); ++k)
      for (const auto& [exp, coeff] : edge.label.terms()) {
        const Exponents prod = add(wm[k], exp);
        if (cutoff >= 0 && total_degree(prod) > cutoff) continue;
        const std::size_t r = rows(prod);
        local.push_back({r, cols + k, -coeff});
        witness_only.push_back({r, k, -coeff});
      }
    if (!wm.empty()) {
      const auto w = assemble(rows.rows.size(), wm.size(), witness_only);
      witness_nullity += static_cast<long>(wm.size() - rank(w));
    }
    for (auto& e : local) {
      e.row += row_base;
      entries.push_back(std::move(e));
    }
    row_base += rows.rows.size();
    cols += wm.size();
  }
  const auto m = assemble(row_base, cols, entries);
  const long nullity = static_cast<long>(cols - (row_base == 0 ? 0 : rank(m)));
  return nullity - witness_nullity;
}

bool homogeneous_labels(const EdgeLabeledGraph& g) {
  for (const auto& e : g.edges())
    if (!homogeneous_degree(e.label).is_homogeneous()) return false;
  return true;
}

long homogeneous_piece(const EdgeLabeledGraph& g, int e) {
  const int nv = g.nvars();
  return projected_dimension(
      g, monomials_of_degree(nv, e), [&](const Poly& f) { return monomials_of_degree(nv, e - f.total_degree()); },
      -1);
}

}  // namespace

std::vector<Spline> spline_space_basis(const GraphPtr& g, int d) {
  const int nv = g->nvars();
  const auto monos = monomials_up_to(nv, d);
  const std::size_t n = g->vertex_count(), vm = monos.size();
  std::size_t cols = n * vm;
  std::vector<Entry> entries;
  std::size_t row_base = 0;
  for (const auto& edge : g->edges()) {
    RowIndex rows;
    for (std::size_t k = 0; k < vm; ++k) {
      const std::size_t r = rows(monos[k]);
      entries.push_back({row_base + r, edge.u * vm + k, 1});
      entries.push_back({row_base + r, edge.v * vm + k, -1});
    }
    const auto wm = monomials_up_to(nv, d - edge.label.total_degree());
    for (std::size_t k = 0; k < wm.size(); ++k)
      for (const auto& [exp, coeff] : edge.label.terms())
        entries.push_back({row_base + rows(add(wm[k], exp)), cols + k, -coeff});
    row_base += rows.rows.size();
    cols += wm.size();
  }
  std::vector<Spline> out;
  for (const auto& v : nullspace(assemble(row_base, cols, entries))) {
    std::vector<Poly> values(n, Poly(nv));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t k = 0; k < vm; ++k)
        if (v[u * vm + k] != 0) values[u] += Poly::monomial(nv, monos[k], v[u * vm + k]);
    out.emplace_back(g, std::move(values));
  }
  return out;
}

long monomial_count(int nvars, int d) {
  if (d < 0) return 0;
  // binomial(d + nvars, nvars)
  long out = 1;
  for (int i = 1; i <= nvars; ++i) out = out * (d + i) / i;
  return out;
}

long spline_space_dimension(const EdgeLabeledGraph& g, int d) {
  if (d < 0) return 0;
  if (homogeneous_labels(g)) return spline_space_dimensions(g, d).back();
  const int nv = g.nvars();
  return projected_dimension(
      g, monomials_up_to(nv, d), [&](const Poly& f) { return monomials_up_to(nv, d - f.total_degree()); }, -1);
}

std::vector<long> spline_space_dimensions(const EdgeLabeledGraph& g, int d_max) {
  std::vector<long> out;
  if (!homogeneous_labels(g)) {
    for (int d = 0; d <= d_max; ++d) out.push_back(spline_space_dimension(g, d));
    return out;
  }
  long total = 0;
  for (int e = 0; e <= d_max; ++e) {
    total += homogeneous_piece(g, e);
    out.push_back(total);
  }
  return out;
}

long quotient_spline_dimension(const EdgeLabeledGraph& g, int d) {
  if (d < 0) return 0;
  const int nv = g.nvars();
  const auto monos = monomials_up_to(nv, d);
  return projected_dimension(g, monos, [&](const Poly&) { return monos; }, d);
}

std::optional<std::vector<Poly>> in_module_span(const GeneratingSet& b, const Spline& p, int slack) {
  if (p.graph() != b.graph()) throw PreconditionError("spline and generating set live on different graphs");
  const auto& g = *b.graph();
  const int nv = g.nvars();
  const int target = p.max_degree();
  std::vector<Poly> result(b.size(), Poly(nv));
  if (target < 0) return result;

  std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
  auto row = [&](std::size_t v, const Exponents& e) { return row_of.emplace(std::make_pair(v, e), row_of.size()).first->second; };
  std::vector<Entry> entries;
  std::vector<std::pair<std::size_t, Exponents>> columns;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& gen = b[i];
    if (gen.is_zero()) continue;
    const int bound = target - gen.low_degree() + slack;
    for (const auto& mono : monomials_up_to(nv, bound)) {
      const std::size_t col = columns.size();
      columns.emplace_back(i, mono);
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (const auto& [exp, coeff] : gen.at(v).terms()) entries.push_back({row(v, add(mono, exp)), col, coeff});
    }
  }
  std::vector<std::pair<std::size_t, Rational>> rhs_terms;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (const auto& [exp, coeff] : p.at(v).terms()) rhs_terms.emplace_back(row(v, exp), coeff);
  if (columns.empty()) return std::nullopt;

  const auto m = assemble(row_of.size(), columns.size(), entries);
  std::vector<Rational> rhs(row_of.size());
  for (const auto& [r, c] : rhs_terms) rhs[r] = c;
  auto sol = solve_linear(m, rhs);
  if (!sol) return std::nullopt;
  for (std::size_t c = 0; c < columns.size(); ++c)
    if ((*sol)[c] != 0) result[columns[c].first] += Poly::monomial(nv, columns[c].second, (*sol)[c]);

  Spline sum = Spline::zero(b.graph());
  for (std::size_t i = 0; i < b.size(); ++i) sum = add(sum, scalar_mul(result[i], b[i]));
  if (!(sum == p)) throw CertificationError("span certificate failed re-expansion");
  return result;
}

std::vector<CertificationRow> certify_basis(const GeneratingSet& b, int d_max) {
  const auto& g = *b.graph();
  const int nv = g.nvars();
  std::vector<int> degrees;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b.degrees()[i]) throw PreconditionError("generator " + std::to_string(i) + " is not homogeneous");
    degrees.push_back(*b.degrees()[i]);
  }
  const auto actual = spline_space_dimensions(g, d_max);

  std::vector<CertificationRow> rows;
  long spanned = 0;
  for (int d = 0; d <= d_max; ++d) {
    // Products of exact degree d; lower degrees were counted already.
    std::map<std::pair<std::size_t, Exponents>, std::size_t> coord;
    std::vector<Entry> entries;
    std::size_t vectors = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (const auto& mono : monomials_of_degree(nv, d - degrees[i])) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
          for (const auto& [exp, coeff] : b[i].at(v).terms()) {
            const auto c = coord.emplace(std::make_pair(v, add(mono, exp)), coord.size()).first->second;
            entries.push_back({vectors, c, coeff});
          }
        ++vectors;
      }
    if (vectors > 0) spanned += static_cast<long>(rank(assemble(vectors, coord.size(), entries)));

    CertificationRow r;
    r.degree = d;
    for (int deg : degrees) r.predicted += monomial_count(nv, d - deg);
    r.actual = actual[d];
    r.span_rank = spanned;
    r.pass = r.predicted == r.actual && r.span_rank == r.actual;
    rows.push_back(r);
  }
  return rows;
}

bool all_pass(const std::vector<CertificationRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

}  // namespace splines
