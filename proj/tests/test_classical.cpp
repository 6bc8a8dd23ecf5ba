#include <doctest.h>

#include "support.hpp"

using namespace test;

namespace {

Pinwheel pinwheel(std::vector<const char*> rays, std::array<Rational, 2> center = {0, 0}) {
  std::vector<Poly> forms;
  for (auto r : rays) forms.push_back(P(r));
  return Pinwheel(center, forms);
}

}  // namespace

TEST_CASE("m") {
  CHECK(m(0) == 1);
  CHECK(m(3) == 10);
  CHECK(m(-2) == 0);
}

TEST_CASE("pinwheel dimension branches") {
  CHECK(pinwheel_dimension(4, 3, true).dimension == 16);
  CHECK(pinwheel_dimension(5, 3, false).dimension == 18);
  for (int n = 3; n <= 8; ++n) CHECK(pinwheel_dimension(n, 1, false).dimension == 3);
  CHECK(pinwheel_dimension(4, 1, true).dimension == 3);
  CHECK_THROWS(pinwheel_dimension(5, 2, true));
  const std::vector<long> singular{1, 3, 8, 16, 28, 44, 64};
  for (int d = 0; d <= 6; ++d) CHECK(pinwheel_dimension(4, d, true).dimension == singular[d]);
}

TEST_CASE("collapsed formula matches the case split") {
  for (int n = 3; n <= 8; ++n)
    for (int d = 0; d <= 8; ++d) {
      long cases;
      if (d <= 1) cases = m(d);
      else if (d == 2) cases = m(2) + (n - 3) * m(0);
      else cases = m(d) + (n - 3) * m(d - 2) + 2 * m(d - 3);
      CHECK(pinwheel_dimension(n, d, false).dimension == cases);
      if (n == 4) {
        long s = d <= 1 ? m(d) : d <= 3 ? m(d) + 2 * m(d - 2) : m(d) + 2 * m(d - 2) + m(d - 4);
        CHECK(pinwheel_dimension(4, d, true).dimension == s);
      }
    }
}

TEST_CASE("lower bound increment") {
  CHECK(lower_bound_increment(4, 3, true) == 6);
  CHECK(lower_bound_increment(5, 3, false) == 8);
  for (int k = 3; k <= 7; ++k)
    for (int d = 0; d <= 6; ++d) {
      const long inc = lower_bound_increment(k, d, false);
      CHECK(inc >= 0);
      CHECK((inc == 0) == (d <= 1 || (k == 3 && d == 2)));
    }
}

TEST_CASE("dual cycles") {
  CHECK(distinct_labels(*dual_cycle(pinwheel({"x", "y", "x+y"})).graph()).size() == 3);
  const auto cross = dual_cycle(pinwheel({"x", "y", "-x", "-y"}));
  CHECK(cross.size() == 4);
  CHECK(is_singular_vertex(cross));
  CHECK(distinct_labels(*dual_cycle(pinwheel({"x", "x+y", "y", "x-y", "x+2y"})).graph()).size() == 5);
  const auto shifted = pinwheel({"x-1", "y-2", "x+y-3"}, {1, 2});
  CHECK(shifted.rays()[0] == P("x"));
  CHECK_THROWS_AS(pinwheel({"x-1", "y", "x+y"}), UnsupportedInput);
  CHECK_THROWS_AS(pinwheel({"x", "2x", "y"}), UnsupportedInput);
  CHECK_THROWS_AS(pinwheel({"x", "y", "x", "y", "x", "x+y"}), UnsupportedInput);
}

TEST_CASE("singularity and realizability") {
  const Poly a = P("x^2"), b = P("y^2"), c = P("(x+y)^2");
  CHECK(is_singular_vertex(CycleGraph::from_sequence(ids(4), {a, b, a, b})));
  CHECK_FALSE(is_singular_vertex(CycleGraph::from_sequence(ids(3), {a, b, c})));
  auto adjacent = CycleGraph::from_sequence(ids(4), {a, a, b, b});
  CHECK_FALSE(is_singular_vertex(adjacent));
  CHECK_FALSE(is_geometrically_realizable(adjacent));
  CHECK(is_geometrically_realizable(CycleGraph::from_sequence(ids(4), {a, b, a, b})));
  CHECK_FALSE(is_geometrically_realizable(CycleGraph::from_sequence(ids(5), {a, b, a, b, b})));
  CHECK_FALSE(is_geometrically_realizable(CycleGraph::from_sequence(ids(6), {a, b, a, c, a, c})));
}

TEST_CASE("full pipeline") {
  const auto generic = pinwheel_full_pipeline(pinwheel({"x", "x+y", "y", "x-y", "x+2y"}), 6);
  CHECK(generic.pass());
  CHECK(generic.degree_sequence == std::vector<int>{1, 0, 2, 2});
  const auto singular = pinwheel_full_pipeline(pinwheel({"x", "y", "-x", "-y"}), 6);
  CHECK(singular.singular);
  CHECK(singular.pass());
  for (const auto& p : {pinwheel({"x", "y", "x+y"}), pinwheel({"x", "y", "x+y", "x+3y", "2x-y", "x-5y"})})
    CHECK(is_geometrically_realizable(dual_cycle(p)));
}
