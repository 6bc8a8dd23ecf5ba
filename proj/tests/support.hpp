#pragma once

#include <random>
#include <set>

#include "splines/io.hpp"
#include "splines/mgs_general.hpp"

namespace test {

using namespace splines;

inline Poly P(const char* text, int nvars = 2) { return parse_poly(text, nvars); }

inline Poly sq(const Rational& p, const Rational& q) {
  Poly l = Poly::variable(2, 0).scaled(p) + Poly::variable(2, 1).scaled(q);
  return l * l;
}

// Four-cycle v1 v2 v4 v3 with i = (x+y)^2 on v1v2, v3v4 and j = (x+2y)^2 on v1v3, v2v4.
inline GraphPtr example_square() {
  return make_graph({"v1", "v2", "v3", "v4"},
                    {{"v1", "v2", P("(x+y)^2"), {}},
                     {"v3", "v4", P("(x+y)^2"), {}},
                     {"v1", "v3", P("(x+2y)^2"), {}},
                     {"v2", "v4", P("(x+2y)^2"), {}}},
                    2);
}

// Six-cycle k k j j i i.
inline CycleGraph six_cycle() {
  return CycleGraph::from_sequence({"v1", "v2", "v3", "v4", "v5", "v6"},
                                   {P("x^2"), P("x^2"), P("y^2"), P("y^2"), P("(x+y)^2"), P("(x+y)^2")});
}

inline std::vector<VertexId> ids(std::size_t n) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + 1));
  return out;
}

// `count` pairwise non-proportional squared forms; some are x^2 or y^2.
inline std::vector<Poly> random_labels(std::mt19937& rng, std::size_t count) {
  std::uniform_int_distribution<int> coef(-6, 6);
  std::set<Poly> seen;
  std::vector<Poly> out;
  while (out.size() < count) {
    const int p = coef(rng), q = coef(rng), r = 1 + (coef(rng) + 6) % 3;
    if (p == 0 && q == 0) continue;
    Poly l = sq(Rational(p, r), Rational(q));
    if (seen.insert(l.monic()).second) out.push_back(l);
  }
  return out;
}

// n-cycle using exactly `k` distinct labels (k <= n).
inline CycleGraph random_cycle(std::mt19937& rng, std::size_t n, std::size_t k) {
  const auto labels = random_labels(rng, k);
  std::vector<std::size_t> use(n);
  for (std::size_t i = 0; i < n; ++i) use[i] = i < k ? i : rng() % k;
  std::shuffle(use.begin(), use.end(), rng);
  std::vector<Poly> seq;
  for (auto u : use) seq.push_back(labels[u]);
  return CycleGraph::from_sequence(ids(n), seq);
}

}  // namespace test
