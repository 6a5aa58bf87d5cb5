#include <doctest.h>

#include "gwb/index.hpp"

#include <vector>

using namespace gwb::index;

TEST_CASE("index_sum") {
  CHECK(index_sum(2, 1, 3, 0) == 6);
  CHECK(index_sum(3, 0, 0, 1) == 0);
  CHECK(index_sum(3, 2, 4, 0) == 16);
}

TEST_CASE("index_plus quoted values") {
  CHECK(index_plus(Scenario::point_blowup, 2, 0, 1, 1, 1).value == 4);
  CHECK(index_plus(Scenario::thm14_side, 3, 0, 1, 1, 1).value == 4);
  CHECK(index_plus(Scenario::surface, 3, 0, 1, 2, 2).value == 8);
  CHECK(index_plus(Scenario::curve_case2_lower_bound, 3, 0, 1, 1, 1).is_bound);
  CHECK_FALSE(index_plus(Scenario::curve_case1, 3, 0, 1, 1, 1).is_bound);
  CHECK_THROWS_AS(index_plus(Scenario::surface, 3, 0, 1, 1, 2), IndexError);
}

TEST_CASE("index_minus quoted values") {
  for (int d = 1; d <= 6; ++d) {
    CHECK(index_minus(2, 3 * d, 0, 0, 1, 1, 1, Scenario::point_blowup).value == 6 * d - 4);
    CHECK(index_minus(2, 3 * d, 0, 0, 1, 1, 1, Scenario::thm14_side).value == 6 * d - 4);
  }
}

TEST_CASE("required degree sum") {
  for (int d = 1; d <= 6; ++d) CHECK(required_degree_sum(2, 3 * d, 0, 3 * d - 1) == 12 * d - 4);
  CHECK(required_degree_sum(2, 1, 0, 2) == 4);
  CHECK(required_degree_sum(3, 0, 1, 0) == 0);
}

TEST_CASE("additivity over the grid") {
  int cases = 0;
  for (auto s : kAllScenarios)
    for (int n = 2; n <= 5; ++n)
      for (int nu = 1; nu <= 4; ++nu)
        for (int g = 0; g <= 1; ++g)
          for (int l = 1; l <= nu; ++l)
            for (int sum_k = nu; sum_k <= 3 * nu; ++sum_k)
              for (std::int64_t c1A = -2; c1A <= 12; c1A += 7) {
                const auto plus = index_plus(s, n, 0, l, sum_k, nu);
                const auto minus = index_minus(n, c1A, g, 0, l, nu, sum_k, s);
                CHECK(plus.value + minus.value == index_sum(n, nu, cut_class_c1(s, n, c1A), g));
                CHECK(plus.is_bound == is_bound(s));
                ++cases;
              }
  CHECK(cases > 1000);
}

TEST_CASE("proof gap is negative") {
  for (int n = 2; n <= 5; ++n)
    for (int nu = 1; nu <= 4; ++nu)
      for (int l = 1; l <= nu; ++l)
        for (int sum_k = nu; sum_k <= 3 * nu; ++sum_k) CHECK(proof_gap(n, l, 0, sum_k, nu) < 0);
}

TEST_CASE("thm14 equality case") {
  for (int n = 2; n <= 5; ++n)
    for (int nu = 1; nu <= 4; ++nu)
      for (int l = 1; l <= nu; ++l)
        for (int sum_k = nu; sum_k <= 3 * nu; ++sum_k) {
          const bool equal = l == nu && nu == sum_k;
          CHECK((thm14_equality_defect(n, l, nu, sum_k) == 0) == equal);
          CHECK(thm14_equality_defect(n, l, nu, sum_k) <= 0);
        }
}

TEST_CASE("component vanishing") {
  ComponentProfile p{.n = 2, .side = Side::plus, .c1A = 3, .g = 0, .g_side = 0, .l_side = 1, .m_side = 0, .ks = {1}};
  const std::vector<int> degrees{4, 4};
  auto v = component_vanishes(p, degrees, Scenario::point_blowup);
  CHECK(v.vanishes);
  CHECK(v.reason == VanishReason::degree_vs_index);

  p.m_side = 1;
  v = component_vanishes(p, degrees, Scenario::point_blowup);
  CHECK(v.vanishes);
  CHECK(v.reason == VanishReason::support);
  CHECK(to_string(v.reason) == "support");

  // degree sum that fits the minus index exactly survives
  p.m_side = 0;
  const std::vector<int> fits{2, 2};
  v = component_vanishes(p, fits, Scenario::point_blowup);
  CHECK_FALSE(v.vanishes);
  CHECK(v.reason == VanishReason::not_excluded);

  p.side = Side::minus;
  CHECK_THROWS_AS(component_vanishes(p, degrees, Scenario::point_blowup), IndexError);
}

TEST_CASE("profile validation") {
  ComponentProfile p{.n = 2, .side = Side::plus, .c1A = 3, .g = 0, .g_side = 0, .l_side = 2, .m_side = 0, .ks = {1}};
  CHECK_THROWS_AS(validate(p), IndexError);
  p.l_side = 1;
  p.ks = {0};
  CHECK_THROWS_AS(validate(p), IndexError);
  p.ks = {2};
  CHECK_NOTHROW(validate(p));
}

TEST_CASE("scenario names round trip") {
  for (auto s : kAllScenarios) CHECK(scenario_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(scenario_from_string("nope"), IndexError);
}
