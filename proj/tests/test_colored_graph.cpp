#include <doctest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "ecg/colored_graph.hpp"
#include "support.hpp"

using ecg::ColoredGraph;
using ecg::ColorId;

TEST_SUITE_BEGIN("colored_graph");

TEST_CASE("build and query a small graph") {
  ColoredGraph g(4);
  CHECK(g.universe_size() == 4);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 0);
  CHECK(g.color_count() == 0);
  CHECK(g.next_fresh_color() == 0);

  g.set_edge(0, 1, 5);
  g.set_edge(2, 1, 5);  // endpoint order does not matter
  g.set_edge(2, 3, 7);
  CHECK(g.edge_count() == 3);
  CHECK(g.color_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.color(1, 2) == 5);
  CHECK(g.find_color(0, 3) == std::nullopt);
  CHECK_THROWS_AS((void)g.color(0, 3), std::out_of_range);
  CHECK(g.next_fresh_color() == 8);
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1).to_vector() == std::vector<int>{0, 2});
  CHECK(g.palette() == std::vector<ColorId>{5, 7});
}

TEST_CASE("recoloring keeps multiplicities consistent") {
  ColoredGraph g(3);
  g.set_edge(0, 1, 1);
  g.set_edge(0, 2, 1);
  g.set_edge(1, 2, 2);
  CHECK(g.color_count() == 2);
  CHECK(g.color_multiplicity().at(1) == 2);

  g.set_edge(0, 1, 3);  // recolor
  CHECK(g.edge_count() == 3);
  CHECK(g.color_count() == 3);
  CHECK(g.color_multiplicity().at(1) == 1);

  g.set_edge(0, 2, 3);  // color 1 disappears entirely
  CHECK(g.color_count() == 2);
  CHECK(g.color_multiplicity().count(1) == 0);
}

TEST_CASE("set_edge rejects bad input") {
  ColoredGraph g(3);
  CHECK_THROWS_AS(g.set_edge(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.set_edge(0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.set_edge(-1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.set_edge(0, 1, -2), std::invalid_argument);
  CHECK_THROWS_AS(ColoredGraph(-1), std::invalid_argument);
}

TEST_CASE("without deletes vertices but keeps indices stable") {
  ColoredGraph g = ecg::complete_graph(5, 0);
  g.set_edge(1, 2, 9);
  std::vector<int> gone{0, 3};
  ColoredGraph h = g.without(gone);

  CHECK(h.universe_size() == 5);
  CHECK(h.order() == 3);
  CHECK(h.vertices() == std::vector<int>{1, 2, 4});
  CHECK_FALSE(h.is_alive(0));
  CHECK(h.is_alive(4));
  CHECK(h.edge_count() == 3);
  CHECK(h.color(1, 2) == 9);
  CHECK(h.color_count() == 2);
  CHECK(h.is_complete());
  CHECK(g.edge_count() == 10);  // source untouched

  std::vector<int> dup{1, 1};
  CHECK_THROWS_AS((void)h.without(std::vector<int>{0}), std::invalid_argument);
  CHECK_THROWS_AS((void)g.without(dup), std::invalid_argument);

  ColoredGraph empty = h.without(std::vector<int>{1, 2, 4});
  CHECK(empty.order() == 0);
  CHECK(empty.edge_count() == 0);
  CHECK(empty.color_count() == 0);
}

TEST_CASE("is_complete tracks alive vertices only") {
  ColoredGraph g(4);
  CHECK_FALSE(g.is_complete());
  g.set_edge(0, 1, 0);
  g.set_edge(0, 2, 0);
  g.set_edge(1, 2, 0);
  CHECK_FALSE(g.is_complete());  // vertex 3 is alive and isolated
  ColoredGraph h = g.without(std::vector<int>{3});
  CHECK(h.is_complete());
  CHECK(ecg::complete_graph(1).is_complete());
  CHECK(ecg::complete_graph(0).is_complete());
}

TEST_CASE("is_rainbow_clique") {
  ColoredGraph g(5);
  g.set_edge(0, 1, 1);
  g.set_edge(0, 2, 2);
  g.set_edge(1, 2, 3);
  g.set_edge(0, 3, 1);
  g.set_edge(1, 3, 4);

  CHECK(g.is_rainbow_clique(std::vector<int>{0, 1, 2}));
  CHECK(g.is_rainbow_clique(std::vector<int>{2, 0, 1}));  // order irrelevant
  CHECK_FALSE(g.is_rainbow_clique(std::vector<int>{0, 1, 3}));  // repeated color 1
  CHECK_FALSE(g.is_rainbow_clique(std::vector<int>{0, 2, 3}));  // edge 2-3 missing
  CHECK(g.is_rainbow_clique(std::vector<int>{0, 1}));
  CHECK(g.is_rainbow_clique(std::vector<int>{4}));
  CHECK(g.is_rainbow_clique(std::vector<int>{1, 1, 0}));  // dedupes to an edge
}

TEST_CASE("edge_map iterates lexicographically") {
  ecg::Rng rng(31);
  ColoredGraph g = ecg::test::random_graph(rng, 9, 0.6, 5);
  std::pair<int, int> prev{-1, -1};
  int count = 0;
  for (const auto& [key, color] : g.edge_map()) {
    CHECK(key > prev);
    CHECK(key.first < key.second);
    CHECK(g.color(key.first, key.second) == color);
    prev = key;
    ++count;
  }
  CHECK(count == g.edge_count());

  auto list = g.edges();
  CHECK(static_cast<int>(list.size()) == g.edge_count());
  for (const auto& e : list) CHECK(g.color(e.u, e.v) == e.color);
}

TEST_CASE("complete_graph helper") {
  ColoredGraph k6 = ecg::complete_graph(6, 3);
  CHECK(k6.is_complete());
  CHECK(k6.edge_count() == 15);
  CHECK(k6.color_count() == 1);
  CHECK(k6.palette() == std::vector<ColorId>{3});
}

TEST_CASE("equality is structural") {
  ecg::Rng rng(7);
  ColoredGraph a = ecg::test::random_graph(rng, 8, 0.5, 4);
  ColoredGraph b = a;
  CHECK(a == b);
  ColoredGraph c = a.without(std::vector<int>{2});
  CHECK_FALSE(a == c);
}

TEST_SUITE_END();
