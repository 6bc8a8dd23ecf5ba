#include "splines/spline.hpp"

#include <algorithm>
#include <set>

namespace splines {

namespace {

void check_entry_count(const EdgeLabeledGraph& g, const std::vector<Poly>& entries) {
  if (entries.size() != g.vertex_count())
    throw PreconditionError("expected " + std::to_string(g.vertex_count()) + " spline entries, got " +
                            std::to_string(entries.size()));
}

std::vector<GkmViolation> find_violations(const EdgeLabeledGraph& g, const std::vector<Poly>& entries) {
  std::vector<GkmViolation> out;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    Poly diff = entries[e.u] - entries[e.v];
    if (diff.is_zero() || divide_exact(diff, e.label)) continue;
    out.push_back({i, g.id(e.u), g.id(e.v), diff, e.label});
  }
  return out;
}

std::vector<Poly> normalize_entries(const EdgeLabeledGraph& g, const std::vector<Poly>& entries) {
  std::vector<Poly> out;
  out.reserve(entries.size());
  for (const auto& p : entries) out.push_back(p.widened(g.nvars()));
  return out;
}

void require_same_graph(const Spline& p, const Spline& q) {
  if (p.graph() != q.graph()) throw PreconditionError("splines live on different graphs");
}

}  // namespace

Spline::Spline(GraphPtr graph, std::vector<Poly> entries, Unchecked)
    : graph_(std::move(graph)), entries_(std::move(entries)) {}

Spline::Spline(GraphPtr graph, std::vector<Poly> entries) : graph_(std::move(graph)) {
  if (!graph_) throw PreconditionError("spline needs a graph");
  check_entry_count(*graph_, entries);
  entries_ = normalize_entries(*graph_, entries);
  auto bad = find_violations(*graph_, entries_);
  if (!bad.empty()) {
    std::string msg = "GKM condition fails on";
    for (const auto& v : bad) msg += " " + v.u + "-" + v.v;
    throw PreconditionError(msg);
  }
}

Spline Spline::zero(GraphPtr graph) {
  const std::size_t n = graph->vertex_count();
  const int nv = graph->nvars();
  return Spline(std::move(graph), std::vector<Poly>(n, Poly(nv)), Unchecked{});
}

Spline Spline::constant(GraphPtr graph, const Rational& c) {
  const std::size_t n = graph->vertex_count();
  const int nv = graph->nvars();
  return Spline(std::move(graph), std::vector<Poly>(n, Poly::constant(nv, c)), Unchecked{});
}

Spline Spline::indicator(GraphPtr graph, const std::vector<std::size_t>& support, const Poly& value) {
  std::vector<Poly> entries(graph->vertex_count(), Poly(graph->nvars()));
  for (auto v : support) entries.at(v) = value.widened(graph->nvars());
  return Spline(std::move(graph), std::move(entries));
}

bool Spline::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<int> Spline::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& p : entries_) {
    const auto h = splines::homogeneous_degree(p);
    if (h.is_zero()) continue;
    if (!h.is_homogeneous()) return std::nullopt;
    if (degree && *degree != h.degree) return std::nullopt;
    degree = h.degree;
  }
  return degree;
}

int Spline::max_degree() const {
  int d = -1;
  for (const auto& p : entries_) d = std::max(d, p.total_degree());
  return d;
}

int Spline::low_degree() const {
  int d = -1;
  for (const auto& p : entries_) {
    if (p.is_zero()) continue;
    d = d < 0 ? p.low_degree() : std::min(d, p.low_degree());
  }
  return d;
}

bool operator==(const Spline& a, const Spline& b) {
  return a.graph_ == b.graph_ && a.entries_ == b.entries_;
}

GkmResult verify_gkm(const GraphPtr& graph, const std::vector<Poly>& entries) {
  check_entry_count(*graph, entries);
  auto normalized = normalize_entries(*graph, entries);
  GkmResult result;
  result.violations = find_violations(*graph, normalized);
  if (result.violations.empty()) result.spline = Spline(graph, std::move(normalized));
  return result;
}

Spline add(const Spline& p, const Spline& q) {
  require_same_graph(p, q);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < p.entries_.size(); ++i) out.push_back(p.entries_[i] + q.entries_[i]);
  return Spline(p.graph_, std::move(out), Spline::Unchecked{});
}

Spline multiply(const Spline& p, const Spline& q) {
  require_same_graph(p, q);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < p.entries_.size(); ++i) out.push_back(p.entries_[i] * q.entries_[i]);
  return Spline(p.graph_, std::move(out), Spline::Unchecked{});
}

Spline scalar_mul(const Poly& r, const Spline& p) {
  const Poly s = r.widened(p.graph_->nvars());
  std::vector<Poly> out;
  for (const auto& e : p.entries_) out.push_back(s * e);
  return Spline(p.graph_, std::move(out), Spline::Unchecked{});
}

GeneratingSet::GeneratingSet(GraphPtr graph, std::vector<Spline> generators, std::vector<std::size_t> ordering)
    : graph_(std::move(graph)), generators_(std::move(generators)), ordering_(std::move(ordering)) {
  for (const auto& g : generators_)
    if (g.graph() != graph_) throw PreconditionError("generator lives on a different graph");
  if (!ordering_.empty() && ordering_.size() != graph_->vertex_count())
    throw PreconditionError("ordering must list every vertex");
  for (const auto& g : generators_) degrees_.push_back(g.homogeneous_degree());
}

std::vector<int> degree_sequence(const GeneratingSet& b) {
  std::vector<int> seq;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& d = b.degrees()[i];
    if (!d) throw PreconditionError("generator " + std::to_string(i) + " is not homogeneous");
    if (static_cast<int>(seq.size()) <= *d) seq.resize(*d + 1, 0);
    ++seq[*d];
  }
  while (!seq.empty() && seq.back() == 0) seq.pop_back();
  return seq;
}

std::optional<std::size_t> pivot(const Spline& s, const std::vector<std::size_t>& ordering) {
  for (std::size_t pos = 0; pos < ordering.size(); ++pos)
    if (!s.at(ordering[pos]).is_zero()) return pos;
  return std::nullopt;
}

bool is_triangular(const GeneratingSet& b, const std::vector<std::size_t>& ordering) {
  std::set<std::size_t> seen;
  for (const auto& g : b.generators()) {
    auto p = pivot(g, ordering);
    if (!p || !seen.insert(*p).second) return false;
  }
  return true;
}

GeneratingSet direct_sum_mgs(const GraphPtr& whole, const std::vector<GeneratingSet>& parts) {
  std::vector<bool> covered(whole->vertex_count(), false);
  std::vector<Spline> generators;
  std::vector<std::size_t> ordering;
  for (const auto& part : parts) {
    const auto& sub = *part.graph();
    std::vector<std::size_t> map;
    for (const auto& id : sub.vertices()) {
      const std::size_t w = whole->index_of(id);
      if (covered[w]) throw PreconditionError("components overlap at vertex '" + id + "'");
      covered[w] = true;
      map.push_back(w);
    }
    for (const auto& g : part.generators()) {
      std::vector<Poly> entries(whole->vertex_count(), Poly(whole->nvars()));
      for (std::size_t i = 0; i < map.size(); ++i) entries[map[i]] = g.at(i).widened(whole->nvars());
      generators.emplace_back(whole, std::move(entries));
    }
    for (auto v : part.ordering()) ordering.push_back(map[v]);
  }
  if (ordering.size() != whole->vertex_count()) ordering.clear();
  return GeneratingSet(whole, std::move(generators), std::move(ordering));
}

GeneratingSet transfer(const GeneratingSet& b, const GraphPtr& target) {
  const auto& src = *b.graph();
  if (src.vertex_count() != target->vertex_count())
    throw PreconditionError("transfer needs graphs with the same vertices");
  std::vector<std::size_t> map;
  for (const auto& id : src.vertices()) map.push_back(target->index_of(id));
  std::vector<Spline> out;
  for (const auto& g : b.generators()) {
    std::vector<Poly> entries(target->vertex_count(), Poly(target->nvars()));
    for (std::size_t i = 0; i < map.size(); ++i) entries[map[i]] = g.at(i).widened(target->nvars());
    out.emplace_back(target, std::move(entries));
  }
  std::vector<std::size_t> ordering;
  for (auto v : b.ordering()) ordering.push_back(map[v]);
  return GeneratingSet(target, std::move(out), std::move(ordering));
}

}  // namespace splines
