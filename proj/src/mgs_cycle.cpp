#include "splines/mgs_cycle.hpp"

#include <algorithm>
#include <map>

#include "splines/linsolve.hpp"
#include "splines/mgs_general.hpp"

namespace splines {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Rational slope_of(const Poly& label) {
  auto form = square_root_form(label);
  if (!form || form->first == 0) throw PreconditionError("label " + label.to_string() + " is not (x+ay)^2");
  return form->second / form->first;
}

Spline on_cycle(const CycleGraph& c, const std::vector<Poly>& by_position) {
  std::vector<Poly> entries(c.size(), Poly(c.graph()->nvars()));
  for (std::size_t pos = 0; pos < c.size(); ++pos) entries[c.vertex(pos)] = by_position[pos];
  return Spline(c.graph(), std::move(entries));
}

std::vector<Poly> by_position(const CycleGraph& c, const Spline& s) {
  std::vector<Poly> out;
  for (std::size_t pos = 0; pos < c.size(); ++pos) out.push_back(s.at(c.vertex(pos)));
  return out;
}

}  // namespace

QuadLabel::QuadLabel(const Rational& slope) : a(slope), generator(quad_label(slope)) {}

std::optional<std::pair<Rational, Rational>> square_root_form(const Poly& label) {
  if (label.nvars() > 2 || label.is_zero()) return std::nullopt;
  const Poly p = label.widened(2);
  if (homogeneous_degree(p).value() != std::optional<int>(2)) return std::nullopt;
  const Rational xx = p.coefficient({2, 0, 0, 0});
  const Rational xy = p.coefficient({1, 1, 0, 0});
  const Rational yy = p.coefficient({0, 2, 0, 0});
  if (xx == 0) {
    if (xy != 0) return std::nullopt;
    return std::make_pair(Rational(0), Rational(1));
  }
  const Rational a = xy / (2 * xx);
  if (yy != xx * a * a) return std::nullopt;
  return std::make_pair(Rational(1), a);
}

bool Substitution::is_identity() const {
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix.size(); ++j)
      if (matrix[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

NormalizedCycle normalize_labels(const CycleGraph& c) {
  if (c.graph()->nvars() > 2) throw UnsupportedInput("out of supported class: cycle labels must live in x, y");
  std::vector<std::pair<Rational, Rational>> forms;
  for (const auto& label : c.edge_labels()) {
    auto form = square_root_form(label);
    if (!form)
      throw UnsupportedInput("out of supported class: label " + label.to_string() + " is not a squared linear form");
    forms.push_back(*form);
  }
  for (long t = 0;; ++t) {
    const Rational tt(t);
    std::vector<QuadLabel> labels;
    bool ok = true;
    for (const auto& [p, q] : forms) {
      const Rational px = t == 0 ? p : p + q * tt;
      const Rational qy = t == 0 ? q : p * tt + q * (1 + tt * tt);
      if (px == 0 || qy == 0) {
        ok = false;
        break;
      }
      labels.emplace_back(qy / px);
    }
    if (!ok) continue;
    Substitution sub;
    sub.matrix = t == 0 ? Matrix{{1, 0}, {0, 1}} : Matrix{{1, tt}, {tt, 1 + tt * tt}};
    sub.inverse = invert_small(sub.matrix);
    std::vector<Poly> gens;
    for (const auto& l : labels) gens.push_back(l.generator);
    auto cycle = CycleGraph::from_sequence(c.ids(), gens);
    return {std::move(cycle), std::move(labels), std::move(sub)};
  }
}

GeneratingSet mgs_triangle(const QuadLabel& a, const QuadLabel& b, const QuadLabel& c) {
  if (a.a == b.a || b.a == c.a || a.a == c.a) throw PreconditionError("triangle labels must be pairwise distinct");
  auto cycle = CycleGraph::from_sequence({"v1", "v2", "v3"}, {a.generator, b.generator, c.generator});
  return mgs_reduced_cycle(cycle, 0);
}

GeneratingSet mgs_reduced_cycle(const CycleGraph& c, std::size_t offset) {
  const std::size_t n = c.size();
  if (!is_reduced(c)) throw PreconditionError("cycle is not reduced");
  auto windows = successive_distinct_windows(c);
  if (std::find(windows.begin(), windows.end(), offset % n) == windows.end())
    throw PreconditionError("edges at the chosen offset are not pairwise distinct");

  const int nv = 2;
  auto pos = [&](std::size_t j) { return (offset + 2 + j) % n; };
  std::vector<Rational> slope(n + 1);
  std::vector<Poly> label(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    slope[k] = slope_of(c.edge_label((offset + 1 + k) % n));
    label[k] = quad_label(slope[k]);
  }
  const Poly x = Poly::variable(nv, 0);
  const Poly y = Poly::variable(nv, 1);

  auto make = [&](const std::vector<Poly>& v_entries) {
    std::vector<Poly> positional(n, Poly(nv));
    for (std::size_t j = 1; j <= n; ++j) positional[pos(j)] = v_entries[j];
    return on_cycle(c, positional);
  };

  std::vector<Spline> gens{Spline::constant(c.graph(), 1)};
  for (std::size_t i = 2; i + 2 <= n; ++i) {
    const auto dep = solve_quadratic_dependence(slope[n - 1], slope[n], slope[1], slope[i], 1);
    std::vector<Poly> e(n + 1, Poly(nv));
    for (std::size_t j = i; j + 2 <= n; ++j) e[j] = label[i];
    e[n - 1] = label[i] - label[n - 1].scaled(dep.A);
    e[n] = e[n - 1] - label[n].scaled(dep.B);
    if (e[n] != label[1].scaled(dep.C)) throw CertificationError("last entry is not a multiple of a_1");
    gens.push_back(make(e));
  }
  for (const auto& [c1, c2] : {std::pair<int, int>{1, 0}, {0, 1}}) {
    const auto split = solve_cubic_split(slope[n], slope[1], slope[n - 1], c1, c2);
    const Poly g = x.scaled(split.B1) + y.scaled(split.B2);
    std::vector<Poly> e(n + 1, Poly(nv));
    e[n - 1] = (c1 == 1 ? x : y) * label[n - 1];
    e[n] = g * label[1];
    gens.push_back(make(e));
  }
  std::vector<std::size_t> ordering;
  for (std::size_t j = 1; j <= n; ++j) ordering.push_back(c.vertex(pos(j)));
  return GeneratingSet(c.graph(), std::move(gens), std::move(ordering));
}

CycleGenerators reinsert_vertex(const CycleGenerators& b, const ReductionStep& step) {
  const std::size_t m = b.cycle.size();
  CycleGenerators out{insert_vertex(b.cycle, step), {}};
  const std::size_t p = step.position;
  const std::size_t before = (p + m - 1) % m;
  for (const auto& gen : b.generators) {
    if (gen.size() != m) throw PreconditionError("generator length does not match the cycle");
    auto next = gen;
    next.insert(next.begin() + static_cast<long>(p), gen[before]);
    on_cycle(out.cycle, next);
    out.generators.push_back(std::move(next));
  }
  std::vector<Poly> indicator(m + 1, Poly(out.cycle.graph()->nvars()));
  indicator[p] = out.cycle.edge_label(p);
  on_cycle(out.cycle, indicator);
  out.generators.push_back(std::move(indicator));
  return out;
}

GeneratingSet mgs_cycle_quadratic(const CycleGraph& c, const CycleOptions& options) {
  const auto& g = c.graph();
  for (const auto& label : c.edge_labels())
    if (!square_root_form(label))
      throw UnsupportedInput("out of supported class: label " + label.to_string() + " is not a squared linear form");
  const auto count = distinct_labels(*g).size();
  if (count == 1) return mgs_one_label(g);
  if (count == 2) return mgs_two_labels(g);

  const auto norm = normalize_labels(c);
  const auto [reduced, log] = reduce_cycle(norm.cycle, options.reduction_start);
  const auto windows = successive_distinct_windows(reduced);
  if (windows.empty()) throw CertificationError("reduced cycle without three successive distinct labels");
  const auto base = mgs_reduced_cycle(reduced, windows[options.rotation_choice % windows.size()]);

  CycleGenerators current{reduced, {}};
  for (const auto& s : base.generators()) current.generators.push_back(by_position(reduced, s));
  for (auto it = log.rbegin(); it != log.rend(); ++it) current = reinsert_vertex(current, *it);

  std::vector<Spline> gens;
  for (const auto& positional : current.generators) {
    std::vector<Poly> entries(g->vertex_count(), Poly(g->nvars()));
    for (std::size_t p = 0; p < positional.size(); ++p) {
      Poly value = norm.substitution.is_identity() ? positional[p]
                                                   : substitute_linear(positional[p], norm.substitution.inverse);
      entries[g->index_of(current.cycle.id(p))] = value.widened(g->nvars());
    }
    const auto nonzero = std::count_if(entries.begin(), entries.end(), [](const Poly& e) { return !e.is_zero(); });
    if (nonzero == 1)
      for (auto& e : entries) e = e.monic();
    gens.emplace_back(g, std::move(entries));
  }
  return GeneratingSet(g, std::move(gens), c.order());
}

std::vector<int> predicted_degree_sequence(int n, int label_count) {
  if (n < 3) throw PreconditionError("predicted degree sequences need n >= 3");
  if (label_count < 1) throw PreconditionError("label count must be positive");
  if (label_count == 1) return {1, 0, n - 1};
  if (label_count == 2) return {1, 0, n - 2, 0, 1};
  return {1, 0, n - 3, 2};
}

}  // namespace splines
