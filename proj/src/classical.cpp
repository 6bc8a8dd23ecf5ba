#include "splines/classical.hpp"

#include <map>

namespace splines {

namespace {

Poly squared_class(const Poly& form) { return (form * form).monic(); }

}  // namespace

Pinwheel::Pinwheel(std::array<Rational, 2> center, std::vector<Poly> rays, int r)
    : center_(std::move(center)), r_(r) {
  if (r != 1) throw UnsupportedInput("only r = 1 pinwheels are supported");
  if (rays.size() < 3) throw UnsupportedInput("a pinwheel needs at least three rays");
  std::map<Poly, int> seen;
  for (const auto& ray : rays) {
    LinForm form;
    try {
      form = LinForm::from_poly(ray.widened(std::max(2, ray.nvars())));
    } catch (const PreconditionError& e) {
      throw UnsupportedInput(e.what());
    }
    for (std::size_t i = 2; i < form.coefficients.size(); ++i)
      if (form.coefficients[i] != 0) throw UnsupportedInput("rays must be forms in x and y");
    const Rational a = form.coefficients[0];
    const Rational b = form.coefficients.size() > 1 ? form.coefficients[1] : Rational(0);
    if (a * center_[0] + b * center_[1] + form.constant != 0)
      throw UnsupportedInput("ray " + ray.to_string() + " does not pass through the center");
    Poly shifted = Poly::variable(2, 0).scaled(a) + Poly::variable(2, 1).scaled(b);
    if (++seen[squared_class(shifted)] > 2) throw UnsupportedInput("a line carries more than two rays");
    rays_.push_back(std::move(shifted));
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (squared_class(rays_[i]) == squared_class(rays_[(i + 1) % rays_.size()]))
      throw UnsupportedInput("consecutive rays are collinear");
}

bool Pinwheel::singular() const { return is_singular_vertex(dual_cycle(*this)); }

CycleGraph dual_cycle(const Pinwheel& p) {
  const std::size_t n = p.size();
  std::vector<VertexId> ids;
  std::vector<Poly> labels;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("t" + std::to_string(i));
    const Poly& ray = p.rays()[(i + 1) % n];
    labels.push_back(ray * ray);
  }
  return CycleGraph::from_sequence(ids, labels);
}

long m(int d) { return d < 0 ? 0 : static_cast<long>(d + 1) * (d + 2) / 2; }

DimReport pinwheel_dimension(int n, int d, bool singular) {
  if (singular && n != 4) throw PreconditionError("a singular vertex has exactly four rays");
  if (n < 3) throw PreconditionError("a pinwheel has at least three rays");
  DimReport r;
  r.n = n;
  r.d = d;
  r.singular = singular;
  if (singular) {
    r.dimension = m(d) + 2 * m(d - 2) + m(d - 4);
    r.branch = "singular: m(d) + 2m(d-2) + m(d-4)";
  } else {
    r.dimension = m(d) + (n - 3) * m(d - 2) + 2 * m(d - 3);
    r.branch = "non-singular: m(d) + (n-3)m(d-2) + 2m(d-3)";
  }
  return r;
}

bool is_singular_vertex(const CycleGraph& c) {
  if (c.size() != 4) return false;
  const auto l = c.edge_labels();
  return l[0] == l[2] && l[1] == l[3] && l[0] != l[1];
}

bool is_geometrically_realizable(const CycleGraph& c) {
  const auto l = c.edge_labels();
  std::map<Poly, int> count;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (++count[l[i]] > 2) return false;
    if (l[i] == l[(i + 1) % l.size()]) return false;
  }
  return count.size() >= 3 || is_singular_vertex(c);
}

long lower_bound_increment(int k, int d, bool singular) { return pinwheel_dimension(k, d, singular).dimension - m(d); }

bool PinwheelReport::pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return !rows.empty();
}

PinwheelReport pinwheel_full_pipeline(const Pinwheel& p, int d_max) {
  const auto cycle = dual_cycle(p);
  if (!is_geometrically_realizable(cycle)) throw CertificationError("dual cycle of a valid pinwheel is not realizable");
  const auto basis = mgs_cycle_quadratic(cycle);
  PinwheelReport report;
  report.n = static_cast<int>(p.size());
  report.singular = is_singular_vertex(cycle);
  report.degree_sequence = degree_sequence(basis);
  const auto oracle = spline_space_dimensions(*cycle.graph(), d_max);
  for (int d = 0; d <= d_max; ++d) {
    PinwheelRow row;
    row.degree = d;
    for (std::size_t e = 0; e < report.degree_sequence.size(); ++e)
      row.predicted += report.degree_sequence[e] * m(d - static_cast<int>(e));
    row.formula = pinwheel_dimension(report.n, d, report.singular).dimension;
    row.oracle = oracle[d];
    row.pass = row.predicted == row.formula && row.formula == row.oracle;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace splines
