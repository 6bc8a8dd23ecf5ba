#include "splines/mgs_general.hpp"

#include "splines/mgs_cycle.hpp"

namespace splines {

namespace {

void require_connected(const EdgeLabeledGraph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
}

FactoredGen factors_of(const EdgeLabeledGraph& g, const Poly& label) {
  for (const auto& e : g.edges())
    if (e.label == label) {
      if (!e.factors) throw UnsupportedInput("cannot factor label " + label.to_string() + " to form an lcm");
      return *e.factors;
    }
  throw PreconditionError("label " + label.to_string() + " is not on the graph");
}

}  // namespace

GeneratingSet mgs_one_label(const GraphPtr& g) {
  require_connected(*g);
  const auto labels = distinct_labels(*g);
  if (labels.size() > 1) throw PreconditionError("one-label construction needs at most one distinct label");
  const auto order = connectivity_order(*g);
  std::vector<Spline> gens{Spline::constant(g, 1)};
  for (std::size_t i = 1; i < order.size(); ++i) gens.push_back(Spline::indicator(g, {order[i]}, labels.front()));
  return GeneratingSet(g, std::move(gens), order);
}

GeneratingSet mgs_two_labels(const GraphPtr& g) {
  require_connected(*g);
  const auto labels = distinct_labels(*g);
  if (labels.size() != 2) throw PreconditionError("two-label construction needs exactly two distinct labels");
  const auto order = connectivity_order(*g);
  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  std::optional<Poly> lcm;
  std::vector<Spline> gens{Spline::constant(g, 1)};
  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::size_t v = order[i];
    std::size_t best = order.size();
    std::size_t edge = 0;
    for (const auto& [w, e] : g->neighbors(v))
      if (position[w] < i && position[w] < best) {
        best = position[w];
        edge = e;
      }
    const Poly& k = g->label(edge);
    const auto comp = component_after_label_deletion(*g, v, k);
    bool later = true;
    for (auto u : comp) later = later && position[u] >= i;
    if (later) {
      gens.push_back(Spline::indicator(g, {comp.begin(), comp.end()}, k));
    } else {
      if (!lcm) lcm = lcm_gen(factors_of(*g, labels[0]), factors_of(*g, labels[1])).expand();
      gens.push_back(Spline::indicator(g, {v}, *lcm));
    }
  }
  return GeneratingSet(g, std::move(gens), order);
}

GeneratingSet mgs_dispatch(const GraphPtr& g) {
  std::vector<GeneratingSet> parts;
  for (const auto& comp : components(*g)) {
    const auto count = distinct_labels(*comp).size();
    if (count <= 1) {
      parts.push_back(mgs_one_label(comp));
    } else if (count == 2) {
      parts.push_back(mgs_two_labels(comp));
    } else {
      std::optional<CycleGraph> cycle;
      try {
        cycle.emplace(comp);
      } catch (const PreconditionError&) {
        throw UnsupportedInput("out of supported class: component with " + std::to_string(count) +
                               " distinct labels is not a cycle");
      }
      parts.push_back(mgs_cycle_quadratic(*cycle));
    }
  }
  return direct_sum_mgs(g, parts);
}

}  // namespace splines
