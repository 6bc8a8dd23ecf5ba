#include <doctest.h>

#include "splines/linsolve.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("squared linear forms") {
  CHECK(square_root_form(P("(x+3y)^2")) == std::make_pair(Rational(1), Rational(3)));
  CHECK(square_root_form(P("4y^2")) == std::make_pair(Rational(0), Rational(1)));
  CHECK_FALSE(square_root_form(P("x*y")));
  CHECK_FALSE(square_root_form(P("x^2+y^2")));
  CHECK_FALSE(square_root_form(P("x^2-1")));
}

TEST_CASE("normalization") {
  auto plain = CycleGraph::from_sequence(ids(3), {P("(x+y)^2"), P("(x+2y)^2"), P("(x+3y)^2")});
  CHECK(normalize_labels(plain).substitution.is_identity());

  for (const char* odd : {"y^2", "x^2"}) {
    auto c = CycleGraph::from_sequence(ids(3), {P(odd), P("(x+2y)^2"), P("(x-y)^2")});
    const auto n = normalize_labels(c);
    CHECK_FALSE(n.substitution.is_identity());
    for (const auto& l : n.labels) CHECK(l.a != 0);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(substitute_linear(c.edge_label(i), n.substitution.matrix).monic() == n.labels[i].generator);
  }
  auto bad = CycleGraph::from_sequence(ids(3), {P("x*y"), P("x^2"), P("y^2")});
  CHECK_THROWS_AS(normalize_labels(bad), UnsupportedInput);
}

TEST_CASE("triangle basis") {
  const auto b = mgs_triangle(QuadLabel(1), QuadLabel(2), QuadLabel(3));
  CHECK(degree_sequence(b) == std::vector<int>{1, 0, 0, 2});
  const Spline diff = add(scalar_mul(P("y"), b[1]), scalar_mul(P("-x"), b[2]));
  CHECK(diff.at(0).is_zero());
  CHECK(diff.at(1).is_zero());
  auto q = divide_exact(diff.at(2), quad_label(2) * quad_label(3));
  REQUIRE(q);
  CHECK(q->is_constant());
  CHECK_FALSE(q->is_zero());
  CHECK_THROWS_AS(mgs_triangle(QuadLabel(1), QuadLabel(1), QuadLabel(3)), PreconditionError);
}

TEST_CASE("reduced cycle basis") {
  auto c = CycleGraph::from_sequence(ids(4), {quad_label(1), quad_label(2), quad_label(3), quad_label(4)});
  const auto b = mgs_reduced_cycle(c, 0);
  CHECK(b.size() == 4);
  CHECK(degree_sequence(b) == std::vector<int>{1, 0, 1, 2});
  // b^2 vanishes at v_1 and its v_n entry is a multiple of a_1.
  const auto& ord = b.ordering();
  CHECK(b[1].at(ord[0]).is_zero());
  CHECK(divide_exact(b[1].at(ord[3]), c.edge_label(2)));
  CHECK(all_pass(certify_basis(b, 5)));

  auto tri = CycleGraph::from_sequence(ids(3), {quad_label(1), quad_label(2), quad_label(3)});
  CHECK(mgs_reduced_cycle(tri, 0).size() == 3);
  CHECK_THROWS(mgs_reduced_cycle(six_cycle(), 0));
}

TEST_CASE("reinsertion") {
  auto tri = CycleGraph::from_sequence({"v1", "v2", "v3"}, {P("x^2"), P("x^2"), P("x^2")});
  const auto base = mgs_one_label(tri.graph());
  CycleGenerators cg{tri, {}};
  for (const auto& s : base.generators()) cg.generators.push_back(s.entries());
  const auto grown = reinsert_vertex(cg, {3, "v4", P("x^2")});
  CHECK(grown.cycle.size() == 4);
  CHECK(grown.generators.size() == 4);
  CHECK(grown.generators.back() == std::vector<Poly>{P("0"), P("0"), P("0"), P("x^2")});
  std::vector<Spline> gens;
  for (const auto& e : grown.generators) gens.emplace_back(grown.cycle.graph(), e);
  const GeneratingSet b(grown.cycle.graph(), gens);
  CHECK(degree_sequence(b) == std::vector<int>{1, 0, 3});
  CHECK(all_pass(certify_basis(b, 4)));
  CHECK_THROWS(reinsert_vertex(cg, {3, "v4", P("y^2")}));
}

TEST_CASE("six-cycle pipeline") {
  const auto b = mgs_cycle_quadratic(six_cycle());
  CHECK(b.size() == 6);
  CHECK(degree_sequence(b) == std::vector<int>{1, 0, 3, 2});
  CHECK(all_pass(certify_basis(b, 6)));
  const auto& last = b.generators().back();
  int nonzero = 0;
  for (const auto& e : last.entries()) nonzero += !e.is_zero();
  CHECK(nonzero == 1);
}

TEST_CASE("degree sequences by label count") {
  auto alt = CycleGraph::from_sequence(ids(4), {P("x^2"), P("y^2"), P("x^2"), P("y^2")});
  CHECK(degree_sequence(mgs_cycle_quadratic(alt)) == std::vector<int>{1, 0, 2, 0, 1});
  auto one = CycleGraph::from_sequence(ids(5), std::vector<Poly>(5, P("(x+y)^2")));
  CHECK(degree_sequence(mgs_cycle_quadratic(one)) == std::vector<int>{1, 0, 4});
  CHECK(predicted_degree_sequence(3, 1) == std::vector<int>{1, 0, 2});
  CHECK(predicted_degree_sequence(4, 2) == std::vector<int>{1, 0, 2, 0, 1});
  CHECK(predicted_degree_sequence(6, 3) == std::vector<int>{1, 0, 3, 2});
  auto cubic = CycleGraph::from_sequence(ids(3), {P("x^3"), P("y^2"), P("x^2")});
  CHECK_THROWS_AS(mgs_cycle_quadratic(cubic), UnsupportedInput);
}

TEST_CASE("property: random cycles certify and are invariant") {
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 3 + rng() % 5;
    const std::size_t k = 3 + rng() % (n - 2);
    auto c = random_cycle(rng, n, k);
    const auto b = mgs_cycle_quadratic(c);
    CHECK(degree_sequence(b) == predicted_degree_sequence(int(n), 3));
    CHECK(all_pass(certify_basis(b, 4)));
    for (std::size_t opt = 1; opt < 4; ++opt)
      CHECK(degree_sequence(mgs_cycle_quadratic(c, {opt, opt})) == degree_sequence(b));
  }
}
