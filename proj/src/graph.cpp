#include "splines/graph.hpp"

#include <algorithm>
#include <deque>

namespace splines {

EdgeLabeledGraph::EdgeLabeledGraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges,
                                   int nvars)
    : vertices_(std::move(vertices)), nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVariables) throw PreconditionError("graph variable count must be in 1..4");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second)
      throw PreconditionError("duplicate vertex id '" + vertices_[i] + "'");
  }
  adjacency_.resize(vertices_.size());
  for (const auto& spec : edges) {
    auto iu = index_.find(spec.u);
    auto iv = index_.find(spec.v);
    if (iu == index_.end() || iv == index_.end())
      throw PreconditionError("edge " + spec.u + "-" + spec.v + " references an unknown vertex");
    if (iu->second == iv->second) throw PreconditionError("loop at vertex '" + spec.u + "'");
    const std::size_t u = std::min(iu->second, iv->second);
    const std::size_t v = std::max(iu->second, iv->second);
    if (edge_between(u, v)) throw PreconditionError("duplicate edge " + spec.u + "-" + spec.v);
    if (spec.label.is_zero()) throw PreconditionError("edge " + spec.u + "-" + spec.v + " has a zero label");

    LabeledEdge e;
    e.u = u;
    e.v = v;
    const Poly raw = spec.label.widened(nvars_);
    e.label = raw.monic();
    if (spec.factors) {
      std::vector<Factor> parts;
      for (const auto& f : *spec.factors) parts.push_back({f.poly.widened(nvars_), f.multiplicity});
      e.factors = factored_from_parts(e.label, parts);
    } else {
      try {
        e.factors = factor_generator(e.label);
      } catch (const UnsupportedInput&) {
        e.factors.reset();
      }
    }
    const std::size_t idx = edges_.size();
    edges_.push_back(std::move(e));
    adjacency_[u].push_back({v, idx});
    adjacency_[v].push_back({u, idx});
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::size_t EdgeLabeledGraph::index_of(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw PreconditionError("unknown vertex '" + id + "'");
  return it->second;
}

std::optional<std::size_t> EdgeLabeledGraph::edge_between(std::size_t u, std::size_t v) const {
  for (const auto& [w, e] : adjacency_.at(u))
    if (w == v) return e;
  return std::nullopt;
}

std::vector<EdgeSpec> EdgeLabeledGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (const auto& e : edges_) {
    EdgeSpec s{vertices_[e.u], vertices_[e.v], e.label, std::nullopt};
    if (e.factors) s.factors = e.factors->factors;
    out.push_back(std::move(s));
  }
  return out;
}

GraphPtr make_graph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges, int nvars) {
  return std::make_shared<const EdgeLabeledGraph>(std::move(vertices), edges, nvars);
}

namespace {

std::vector<std::size_t> bfs_from(const EdgeLabeledGraph& g, std::size_t start, std::vector<bool>& seen) {
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (const auto& [w, e] : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return order;
}

}  // namespace

std::vector<std::size_t> connectivity_order(const EdgeLabeledGraph& g) {
  if (g.vertex_count() == 0) return {};
  std::vector<bool> seen(g.vertex_count(), false);
  auto order = bfs_from(g, 0, seen);
  if (order.size() != g.vertex_count()) throw PreconditionError("connectivity order needs a connected graph");
  return order;
}

bool is_connected(const EdgeLabeledGraph& g) {
  return component_vertex_sets(g).size() <= 1;
}

std::vector<std::vector<std::size_t>> component_vertex_sets(const EdgeLabeledGraph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) continue;
    auto comp = bfs_from(g, v, seen);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

GraphPtr induced_subgraph(const EdgeLabeledGraph& g, const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> keep(g.vertex_count(), false);
  std::vector<VertexId> ids;
  for (auto v : sorted) {
    keep.at(v) = true;
    ids.push_back(g.id(v));
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    if (!keep[e.u] || !keep[e.v]) continue;
    EdgeSpec s{g.id(e.u), g.id(e.v), e.label, std::nullopt};
    if (e.factors) s.factors = e.factors->factors;
    edges.push_back(std::move(s));
  }
  return make_graph(std::move(ids), edges, g.nvars());
}

std::vector<GraphPtr> components(const EdgeLabeledGraph& g) {
  std::vector<GraphPtr> out;
  for (const auto& set : component_vertex_sets(g)) out.push_back(induced_subgraph(g, set));
  return out;
}

std::set<std::size_t> component_after_label_deletion(const EdgeLabeledGraph& g, std::size_t v,
                                                     const Poly& label) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  const Poly canonical = label.is_zero() ? label : label.widened(g.nvars()).monic();
  std::set<std::size_t> seen{v};
  std::deque<std::size_t> queue{v};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : g.neighbors(u)) {
      if (g.label(e) == canonical || seen.count(w)) continue;
      seen.insert(w);
      queue.push_back(w);
    }
  }
  return seen;
}

std::vector<Poly> distinct_labels(const EdgeLabeledGraph& g) {
  std::vector<Poly> out;
  for (const auto& e : g.edges())
    if (std::find(out.begin(), out.end(), e.label) == out.end()) out.push_back(e.label);
  return out;
}

// ---------------------------------------------------------------------------
// Cycles

CycleGraph::CycleGraph(GraphPtr graph, std::vector<std::size_t> order)
    : graph_(std::move(graph)), order_(std::move(order)) {}

CycleGraph::CycleGraph(GraphPtr graph) : graph_(std::move(graph)) {
  const auto& g = *graph_;
  const std::size_t n = g.vertex_count();
  if (n < 3) throw PreconditionError("a cycle needs at least three vertices");
  if (g.edges().size() != n) throw PreconditionError("graph is not a cycle: edge count differs from vertex count");
  for (std::size_t v = 0; v < n; ++v)
    if (g.neighbors(v).size() != 2) throw PreconditionError("graph is not a cycle: vertex '" + g.id(v) + "' does not have degree 2");
  order_.push_back(0);
  std::size_t prev = 0;
  std::size_t cur = g.neighbors(0).front().first;
  while (cur != 0) {
    order_.push_back(cur);
    const auto& nb = g.neighbors(cur);
    const std::size_t next = nb[0].first == prev ? nb[1].first : nb[0].first;
    prev = cur;
    cur = next;
    if (order_.size() > n) break;
  }
  if (order_.size() != n) throw PreconditionError("graph is not a single cycle");
}

CycleGraph CycleGraph::from_sequence(const std::vector<VertexId>& ids, const std::vector<Poly>& labels) {
  if (ids.size() < 3) throw PreconditionError("a cycle needs at least three vertices");
  if (labels.size() != ids.size()) throw PreconditionError("a cycle needs one label per edge");
  int nvars = 1;
  for (const auto& l : labels) nvars = std::max(nvars, l.nvars());
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < ids.size(); ++i)
    edges.push_back({ids[i], ids[(i + 1) % ids.size()], labels[i].widened(nvars), std::nullopt});
  std::vector<std::size_t> order(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) order[i] = i;
  return CycleGraph(make_graph(ids, edges, nvars), std::move(order));
}

const Poly& CycleGraph::edge_label(std::size_t i) const {
  const std::size_t n = order_.size();
  auto e = graph_->edge_between(order_[i % n], order_[(i + 1) % n]);
  return graph_->label(*e);
}

std::vector<Poly> CycleGraph::edge_labels() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(edge_label(i));
  return out;
}

std::vector<VertexId> CycleGraph::ids() const {
  std::vector<VertexId> out;
  for (auto v : order_) out.push_back(graph_->id(v));
  return out;
}

bool is_reduced(const CycleGraph& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    if (c.edge_label((i + n - 1) % n) == c.edge_label(i)) return false;
  return true;
}

std::pair<CycleGraph, ReductionLog> reduce_cycle(const CycleGraph& c, std::size_t start) {
  if (distinct_labels(*c.graph()).size() < 3)
    throw PreconditionError("cycle reduction needs at least three distinct labels");
  std::vector<VertexId> ids = c.ids();
  std::vector<Poly> labels = c.edge_labels();
  ReductionLog log;
  bool removed = true;
  while (removed) {
    removed = false;
    const std::size_t n = ids.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = (start + k) % n;
      const std::size_t before = (i + n - 1) % n;
      if (labels[before] != labels[i]) continue;
      log.push_back({i, ids[i], labels[i]});
      ids.erase(ids.begin() + static_cast<long>(i));
      labels.erase(labels.begin() + static_cast<long>(i));
      removed = true;
      break;
    }
  }
  if (log.empty()) return {c, log};
  return {CycleGraph::from_sequence(ids, labels), log};
}

CycleGraph insert_vertex(const CycleGraph& c, const ReductionStep& step) {
  std::vector<VertexId> ids = c.ids();
  std::vector<Poly> labels = c.edge_labels();
  const std::size_t m = ids.size();
  if (step.position > m) throw PreconditionError("reinsertion position out of range");
  if (c.graph()->has_vertex(step.removed))
    throw PreconditionError("vertex '" + step.removed + "' is already in the cycle");
  const std::size_t edge = (step.position + m - 1) % m;
  if (labels[edge] != step.label.widened(labels[edge].nvars()).monic())
    throw PreconditionError("reinsertion edge does not carry the logged label");
  ids.insert(ids.begin() + static_cast<long>(step.position), step.removed);
  labels.insert(labels.begin() + static_cast<long>(step.position), labels[edge]);
  return CycleGraph::from_sequence(ids, labels);
}

std::vector<std::size_t> successive_distinct_windows(const CycleGraph& c) {
  const std::size_t n = c.size();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& a = c.edge_label(i);
    const Poly& b = c.edge_label(i + 1);
    const Poly& d = c.edge_label(i + 2);
    if (a != b && b != d && a != d) out.push_back(i);
  }
  return out;
}

std::size_t find_three_successive_distinct(const CycleGraph& c) {
  if (!is_reduced(c)) throw PreconditionError("window search needs a reduced cycle");
  if (distinct_labels(*c.graph()).size() < 3)
    throw PreconditionError("window search needs at least three distinct labels");
  auto windows = successive_distinct_windows(c);
  if (windows.empty()) throw CertificationError("reduced cycle without three successive distinct labels");
  return windows.front();
}

}  // namespace splines
