#include <doctest.h>

#include <stdexcept>

#include "ecg/bounds.hpp"
#include "ecg/constructions.hpp"
#include "support.hpp"

using ecg::BoundId;
using ecg::BoundQuery;
using ecg::BoundTarget;
using ecg::test::c2;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("rainbow triangle threshold") {
  for (int n : {1, 4, 10, 40}) {
    auto th = ecg::bound_value({BoundId::thm11, n, 0, 0});
    CHECK(th.value == c2(n + 1));
    CHECK_FALSE(th.strict);
    CHECK(th.target == BoundTarget::edges_plus_colors);
  }
  CHECK(ecg::bound_value({BoundId::thm11, 10, 0, 0}).value == 55);
}

TEST_CASE("rainbow clique thresholds") {
  auto th12 = ecg::bound_value({BoundId::thm12, 6, 0, 4});
  CHECK(th12.value == c2(6) + ecg::turan_edges(6, 2) + 2);
  CHECK(th12.value == 26);
  CHECK_FALSE(th12.strict);

  auto th13 = ecg::bound_value({BoundId::cor13, 9, 0, 4});
  CHECK(th13.value == c2(9) + ecg::anti_ramsey_rb(9, 4));
  CHECK(th13.value == 58);

  // triangle case rides on rb(n,3) = n
  CHECK(ecg::bound_value({BoundId::cor13, 12, 0, 3}).value == c2(12) + 12);

  CHECK_THROWS_AS(ecg::bound_value({BoundId::thm12, 6, 0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ecg::bound_value({BoundId::thm12, 3, 0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(ecg::bound_value({BoundId::cor13, 2, 0, 3}), std::invalid_argument);
}

TEST_CASE("disjoint clique sum threshold: closed form and peeling recurrence") {
  CHECK(ecg::disjoint_clique_sum_threshold(3, 2, 10) == 76);
  CHECK(ecg::disjoint_clique_sum_threshold(3, 1, 10) ==
        c2(10) + ecg::anti_ramsey_rb(10, 3));

  // removing one k-clique costs at most 2k(n-k)+k(k-1) of e+c, and the
  // threshold telescopes along exactly that step
  for (int k = 3; k <= 5; ++k)
    for (int m = 2; m <= 4; ++m)
      for (int n = k * m; n <= k * m + 12; ++n) {
        long long step = 2LL * k * (n - k) + static_cast<long long>(k) * (k - 1);
        CHECK(ecg::disjoint_clique_sum_threshold(k, m, n) ==
              ecg::disjoint_clique_sum_threshold(k, m - 1, n - k) + step);
      }

  CHECK(ecg::bound_value({BoundId::prop14_f, 10, 2, 3}).value == 76);
  CHECK_THROWS_AS(ecg::disjoint_clique_sum_threshold(3, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(ecg::disjoint_clique_sum_threshold(2, 2, 10), std::invalid_argument);
}

TEST_CASE("color-only packing threshold is strict") {
  auto th = ecg::bound_value({BoundId::thm15, 26, 2, 0});
  CHECK(th.value == 49);
  CHECK(th.strict);
  CHECK(th.target == BoundTarget::colors);
  CHECK(ecg::bound_value({BoundId::thm15, 20, 1, 0}).value == 19);
  CHECK_THROWS_AS(ecg::bound_value({BoundId::thm15, 20, 0, 0}), std::invalid_argument);
}

TEST_CASE("combined packing threshold is strict over e+c") {
  auto th = ecg::bound_value({BoundId::conj14, 12, 2, 0});
  CHECK(th.value == 87);
  CHECK(th.strict);
  CHECK(th.target == BoundTarget::edges_plus_colors);
  CHECK(ecg::bound_value({BoundId::conj14, 10, 2, 0}).value == 62);

  // with m = 1 the predicate coincides with the rainbow triangle threshold:
  // strict > at value v is the same test as non-strict >= at v + 1
  for (int n : {4, 7, 13}) {
    auto strict = ecg::bound_value({BoundId::conj14, n, 1, 0});
    auto loose = ecg::bound_value({BoundId::thm11, n, 0, 0});
    REQUIRE(strict.strict);
    REQUIRE_FALSE(loose.strict);
    CHECK(strict.value + 1 == loose.value);
  }
}

TEST_CASE("edge-disjoint packing threshold is exposed without a checker") {
  auto th = ecg::bound_value({BoundId::lili_edge_disjoint, 10, 0, 4});
  CHECK(th.value == c2(11) + 9);
  CHECK_FALSE(th.strict);
  CHECK_THROWS_AS(ecg::bound_value({BoundId::lili_edge_disjoint, 10, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("the construction walks just under the packing thresholds") {
  // the tail-block coloring realizes the color-only threshold exactly, so
  // the strict form cannot be weakened
  for (int m = 1; m <= 4; ++m)
    for (int n = 9 * m + 8; n <= 9 * m + 14; ++n) {
      auto g = ecg::build_main_construction(n, m);
      CHECK(g.color_count() == ecg::bound_value({BoundId::thm15, n, m, 0}).value);
      CHECK(g.edge_count() + g.color_count() ==
            ecg::bound_value({BoundId::conj14, n, m, 0}).value);
    }
}

TEST_CASE("retired threshold sits below what the construction reaches") {
  CHECK(ecg::refuted_mk3_conjecture_threshold(10, 2) == 61);
  auto g = ecg::build_main_construction(10, 2);
  CHECK(g.edge_count() + g.color_count() == 62);
}

TEST_CASE("bound id strings round trip") {
  for (auto id : {BoundId::thm11, BoundId::thm12, BoundId::cor13, BoundId::prop14_f,
                  BoundId::thm15, BoundId::conj14, BoundId::lili_edge_disjoint}) {
    auto back = ecg::bound_id_from_string(ecg::to_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(ecg::bound_id_from_string("thm99").has_value());
  CHECK_FALSE(ecg::bound_id_from_string("").has_value());
}

TEST_SUITE_END();
