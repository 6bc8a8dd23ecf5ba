#include <doctest.h>

#include "support.hpp"

using namespace test;

TEST_CASE("graph validation and canonical labels") {
  auto g = make_graph({"a", "b"}, {{"a", "b", P("2(x+y)^2"), {}}}, 2);
  CHECK(g->label(0) == P("(x+y)^2"));
  CHECK_THROWS(make_graph({"a"}, {{"a", "a", P("x"), {}}}, 2));
  CHECK_THROWS(make_graph({"a", "b"}, {{"a", "b", P("x"), {}}, {"b", "a", P("y"), {}}}, 2));
  CHECK_THROWS(make_graph({"a", "b"}, {{"a", "b", P("0"), {}}}, 2));
  CHECK_THROWS(make_graph({"a", "a"}, {}, 2));
}

TEST_CASE("connectivity order") {
  auto single = make_graph({"a"}, {}, 2);
  CHECK(connectivity_order(*single) == std::vector<std::size_t>{0});
  auto path = make_graph({"a", "b", "c"}, {{"a", "b", P("x"), {}}, {"b", "c", P("y"), {}}}, 2);
  CHECK(connectivity_order(*path) == std::vector<std::size_t>{0, 1, 2});
  auto c4 = CycleGraph::from_sequence(ids(4), {P("x"), P("x"), P("x"), P("x")});
  CHECK(connectivity_order(*c4.graph()) == std::vector<std::size_t>{0, 1, 3, 2});
  CHECK_THROWS(connectivity_order(*make_graph({"a", "b"}, {}, 2)));
}

TEST_CASE("property: connectivity order has earlier neighbours") {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + rng() % 6;
    auto c = random_cycle(rng, n, 1 + rng() % 3);
    const auto order = connectivity_order(*c.graph());
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    for (std::size_t i = 1; i < n; ++i) {
      bool earlier = false;
      for (auto [w, e] : c.graph()->neighbors(order[i])) earlier = earlier || pos[w] < i;
      CHECK(earlier);
    }
  }
}

TEST_CASE("components") {
  auto g = make_graph({"a", "b", "c", "d"}, {{"a", "b", P("x"), {}}, {"c", "d", P("x"), {}}}, 2);
  CHECK(components(*g).size() == 2);
  CHECK(components(*make_graph({"a", "b", "c"}, {}, 2)).size() == 3);
  CHECK(components(*example_square()).size() == 1);
}

TEST_CASE("component after label deletion") {
  auto g = example_square();
  CHECK(component_after_label_deletion(*g, 1, P("(x+y)^2")) == std::set<std::size_t>{1, 3});
  auto one = CycleGraph::from_sequence(ids(3), {P("x"), P("x"), P("x")});
  CHECK(component_after_label_deletion(*one.graph(), 1, P("x")) == std::set<std::size_t>{1});
  CHECK(component_after_label_deletion(*one.graph(), 1, P("y")).size() == 3);
}

TEST_CASE("distinct labels") {
  CHECK(distinct_labels(*six_cycle().graph()).size() == 3);
  CHECK(distinct_labels(*make_graph({"a"}, {}, 2)).empty());
}

TEST_CASE("cycle reduction") {
  auto tri = CycleGraph::from_sequence(ids(3), {P("x^2"), P("y^2"), P("(x+y)^2")});
  auto [same, empty_log] = reduce_cycle(tri);
  CHECK(empty_log.empty());
  CHECK(same.size() == 3);

  auto [reduced, log] = reduce_cycle(six_cycle());
  CHECK(reduced.size() == 3);
  CHECK(log.size() == 3);
  CHECK(is_reduced(reduced));
  CycleGraph back = reduced;
  for (auto it = log.rbegin(); it != log.rend(); ++it) back = insert_vertex(back, *it);
  CHECK(back.ids() == six_cycle().ids());
  CHECK(back.edge_labels() == six_cycle().edge_labels());

  auto five = CycleGraph::from_sequence(ids(5), {P("x^2"), P("x^2"), P("y^2"), P("(x+y)^2"), P("(x-y)^2")});
  auto [four, one_log] = reduce_cycle(five);
  CHECK(four.size() == 4);
  CHECK(one_log.size() == 1);
}

TEST_CASE("property: reduction replays exactly") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    auto c = random_cycle(rng, 3 + rng() % 6, 3);
    for (std::size_t start = 0; start < 3; ++start) {
      auto [r, log] = reduce_cycle(c, start);
      CHECK(is_reduced(r));
      CHECK(r.size() >= 3);
      CycleGraph back = r;
      for (auto it = log.rbegin(); it != log.rend(); ++it) back = insert_vertex(back, *it);
      CHECK(back.ids() == c.ids());
      CHECK(back.edge_labels() == c.edge_labels());
    }
  }
}

TEST_CASE("three successive distinct labels") {
  auto tri = CycleGraph::from_sequence(ids(3), {P("x^2"), P("y^2"), P("(x+y)^2")});
  CHECK(find_three_successive_distinct(tri) == 0);
  const Poly a = P("x^2"), b = P("y^2"), c = P("(x+y)^2");
  auto c4 = CycleGraph::from_sequence(ids(4), {a, b, a, c});
  const auto off = find_three_successive_distinct(c4);
  CHECK(c4.edge_label(off + 1) == a);
  auto alt = CycleGraph::from_sequence(ids(4), {a, b, a, b});
  CHECK_THROWS(find_three_successive_distinct(alt));
}
