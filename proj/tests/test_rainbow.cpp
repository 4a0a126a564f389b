#include <doctest.h>

#include <algorithm>
#include <set>

#include "ecg/constructions.hpp"
#include "ecg/rainbow.hpp"
#include "support.hpp"

using ecg::ColoredGraph;
using ecg::Triangle;

namespace {

ColoredGraph rainbow_complete(int n) {
  ColoredGraph g(n);
  ecg::ColorId c = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v, c++);
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("rainbow");

TEST_CASE("triangle enumeration agrees with the triple-loop oracle") {
  ecg::Rng rng(555);
  for (int round = 0; round < 60; ++round) {
    int n = 3 + rng.below(11);
    ColoredGraph g = ecg::test::random_graph(rng, n, 0.6, 1 + rng.below(8));
    if (round % 4 == 0) g = g.without(std::vector<int>{rng.below(n)});
    auto got = ecg::enumerate_rainbow_triangles(g);
    auto want = ecg::test::naive_rainbow_triangles(g);
    CHECK(got == want);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("clique enumeration: k = 3 matches triangles, k = 2 matches edges") {
  ecg::Rng rng(7);
  ColoredGraph g = ecg::test::random_graph(rng, 10, 0.7, 6);
  auto cliques = ecg::enumerate_rainbow_cliques(g, 3);
  auto triangles = ecg::enumerate_rainbow_triangles(g);
  REQUIRE(cliques.size() == triangles.size());
  for (size_t i = 0; i < cliques.size(); ++i) {
    CHECK(cliques[i] == std::vector<int>(triangles[i].begin(), triangles[i].end()));
  }
  CHECK(ecg::enumerate_rainbow_cliques(g, 2).size() == static_cast<size_t>(g.edge_count()));
  CHECK(ecg::enumerate_rainbow_cliques(g, 1).size() == static_cast<size_t>(g.order()));
  CHECK_THROWS_AS(ecg::enumerate_rainbow_cliques(g, 0), std::invalid_argument);
}

TEST_CASE("find_rainbow_clique returns the lexicographically least witness") {
  ecg::Rng rng(13);
  for (int round = 0; round < 25; ++round) {
    ColoredGraph g = ecg::test::random_graph(rng, 9, 0.65, 5);
    for (int k : {3, 4}) {
      auto all = ecg::enumerate_rainbow_cliques(g, k);
      auto one = ecg::find_rainbow_clique(g, k);
      CHECK(one.has_value() == !all.empty());
      if (one) {
        CHECK(*one == all.front());
        CHECK(g.is_rainbow_clique(*one));
      }
    }
  }
}

TEST_CASE("rainbow K_n contains every clique order") {
  ColoredGraph g = rainbow_complete(7);
  for (int k = 1; k <= 7; ++k) {
    auto hit = ecg::find_rainbow_clique(g, k);
    REQUIRE(hit.has_value());
    std::vector<int> expect(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) expect[static_cast<size_t>(i)] = i;
    CHECK(*hit == expect);
  }
  CHECK_FALSE(ecg::find_rainbow_clique(g, 8).has_value());

  ecg::SearchStats stats;
  (void)ecg::find_rainbow_clique(g, 4, &stats);
  CHECK(stats.nodes_explored > 0);
}

TEST_CASE("staircase colorings have no rainbow triangle, hence no k >= 3 clique") {
  for (int n : {5, 12, 20}) {
    ColoredGraph g = ecg::build_tn(n);
    CHECK_FALSE(ecg::find_rainbow_clique(g, 3).has_value());
    CHECK_FALSE(ecg::find_rainbow_clique(g, 4).has_value());
    CHECK(ecg::max_disjoint_rainbow_triangles(g).count == 0);
  }
}

TEST_CASE("disjoint pack search finds planted packs") {
  // two rainbow triangles planted in an otherwise one-colored K_9
  ColoredGraph g = ecg::complete_graph(9, 0);
  g.set_edge(0, 1, 1);
  g.set_edge(0, 2, 2);
  g.set_edge(1, 2, 3);
  g.set_edge(3, 4, 4);
  g.set_edge(3, 5, 5);
  g.set_edge(4, 5, 6);

  auto two = ecg::find_disjoint_rainbow_cliques(g, 3, 2);
  REQUIRE(two.has_value());
  CHECK(ecg::validate_clique_pack(g, *two, 3));
  CHECK(two->cliques[0] == std::vector<int>{0, 1, 2});
  CHECK(two->cliques[1] == std::vector<int>{3, 4, 5});

  CHECK_FALSE(ecg::find_disjoint_rainbow_cliques(g, 3, 3).has_value());

  auto best = ecg::max_disjoint_rainbow_triangles(g);
  CHECK(best.count == 2);
  CHECK(ecg::validate_triangle_pack(g, best.pack));
}

TEST_CASE("maximum pack agrees with the brute-force oracle") {
  ecg::Rng rng(808);
  for (int round = 0; round < 50; ++round) {
    int n = 6 + rng.below(4);
    ColoredGraph g = ecg::test::random_graph(rng, n, 0.55, 1 + rng.below(10));
    if (ecg::enumerate_rainbow_triangles(g).size() > 40) continue;
    int want = ecg::test::naive_max_disjoint_triangles(g);
    auto got = ecg::max_disjoint_rainbow_triangles(g);
    CHECK(got.count == want);
    CHECK(static_cast<int>(got.pack.triangles.size()) == want);
    CHECK(ecg::validate_triangle_pack(g, got.pack));

    // the exhaustive searcher must agree in both directions
    CHECK(ecg::find_disjoint_rainbow_cliques(g, 3, std::max(want, 1)).has_value() ==
          (want >= 1));
    CHECK_FALSE(ecg::find_disjoint_rainbow_cliques(g, 3, want + 1).has_value());
  }
}

TEST_CASE("pack search respects deleted vertices") {
  ColoredGraph g = rainbow_complete(9);
  auto full = ecg::find_disjoint_rainbow_cliques(g, 3, 3);
  REQUIRE(full.has_value());
  ColoredGraph h = g.without(std::vector<int>{0, 1, 2});
  auto reduced = ecg::find_disjoint_rainbow_cliques(h, 3, 3);
  CHECK_FALSE(reduced.has_value());
  auto two = ecg::find_disjoint_rainbow_cliques(h, 3, 2);
  REQUIRE(two.has_value());
  for (const auto& c : two->cliques)
    for (int v : c) CHECK(v >= 3);
}

TEST_CASE("pack validators reject broken packs") {
  ColoredGraph g = rainbow_complete(6);
  ecg::TrianglePack overlap{{{0, 1, 2}, {2, 3, 4}}};
  CHECK_FALSE(ecg::validate_triangle_pack(g, overlap));

  ecg::TrianglePack dead{{{0, 1, 2}}};
  CHECK_FALSE(ecg::validate_triangle_pack(g.without(std::vector<int>{1}), dead));

  ColoredGraph mono = ecg::complete_graph(6, 0);
  ecg::TrianglePack not_rainbow{{{0, 1, 2}}};
  CHECK_FALSE(ecg::validate_triangle_pack(mono, not_rainbow));

  ecg::CliquePack wrong_size{{{0, 1, 2, 3}, {4, 5}}};
  CHECK_FALSE(ecg::validate_clique_pack(g, wrong_size, 3));
}

TEST_CASE("removing a rainbow clique loses at most 2k(n-k)+k(k-1) of e+c") {
  ecg::Rng rng(4242);
  for (int round = 0; round < 120; ++round) {
    int n = 7 + rng.below(6);
    ColoredGraph g = rng.chance(0.5) ? ecg::test::random_complete(rng, n, 1 + rng.below(30))
                                     : ecg::test::random_graph(rng, n, 0.7, 1 + rng.below(20));
    for (int k : {3, 4}) {
      auto clique = ecg::find_rainbow_clique(g, k);
      if (!clique) continue;
      long long before = g.edge_count() + g.color_count();
      ColoredGraph h = g.without(*clique);
      long long after = h.edge_count() + h.color_count();
      CHECK(before - after <= 2LL * k * (n - k) + static_cast<long long>(k) * (k - 1));
    }
  }
}

TEST_SUITE_END();
