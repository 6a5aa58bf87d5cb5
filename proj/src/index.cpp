#include "gwb/index.hpp"

#include <numeric>
#include <string>

namespace gwb::index {

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::point_blowup:
      return "point-blowup";
    case Scenario::blowup_exceptional_side:
      return "blowup-exceptional-side";
    case Scenario::thm14_side:
      return "thm14-side";
    case Scenario::curve_case1:
      return "curve-case1";
    case Scenario::curve_case2_lower_bound:
      return "curve-case2-lower-bound";
    case Scenario::surface:
      return "surface";
  }
  return "?";
}

Scenario scenario_from_string(std::string_view s) {
  for (auto sc : kAllScenarios)
    if (to_string(sc) == s) return sc;
  throw IndexError("unknown index scenario '" + std::string(s) + "'");
}

bool is_bound(Scenario s) {
  return s == Scenario::blowup_exceptional_side || s == Scenario::curve_case2_lower_bound;
}

std::int64_t ComponentProfile::sum_k() const { return std::accumulate(ks.begin(), ks.end(), std::int64_t{0}); }

void validate(const ComponentProfile& p) {
  if (p.n < 2) throw IndexError("index calculus assumes n >= 2");
  if (p.g < 0 || p.g_side < 0 || p.g_side > p.g) throw IndexError("side genus must lie in [0, g]");
  if (p.m_side < 0) throw IndexError("marked point count must be >= 0");
  for (int k : p.ks)
    if (k < 1) throw IndexError("contact multiplicities must be >= 1");
  if (!p.ks.empty() && p.l_side < 1) throw IndexError("a nonempty side has at least one component");
  if (p.side == Side::plus && p.l_side > p.nu())
    throw IndexError("every plus-side component carries an end, so l+ <= nu");
}

std::int64_t index_sum(int n, int nu, std::int64_t c1A, int g) {
  return 2 * std::int64_t{n - 1} * nu + 2 * c1A + 2 * std::int64_t{3 - n} * (g - 1);
}

namespace {

void check_ends(std::int64_t sum_k, int nu) {
  if (nu < 0) throw IndexError("number of ends must be >= 0");
  if (sum_k < nu) throw IndexError("contact multiplicities must be >= 1 (sum k < nu)");
}

}  // namespace

IndexValue index_plus(Scenario s, int n, int g_plus, int l_plus, std::int64_t sum_k, int nu) {
  check_ends(sum_k, nu);
  const std::int64_t N = n;
  switch (s) {
    case Scenario::point_blowup:
      return {2 * (3 - N) * (g_plus - l_plus) + 2 * N * sum_k + 2 * nu, false};
    case Scenario::thm14_side:
      return {2 * N * sum_k - 4 * l_plus + 2 * nu, false};
    case Scenario::curve_case1:
      return {(2 * N - 6) * l_plus + 2 * (N - 1) * sum_k + 2 * nu, false};
    case Scenario::curve_case2_lower_bound:
      return {(2 * N - 6) * l_plus + 2 * (N - 1) * sum_k + 2 * nu, true};
    case Scenario::blowup_exceptional_side:
      return {(2 * N - 6) * l_plus + 2 * (2 * N - 3) * sum_k + 2 * nu, true};
    case Scenario::surface:
      return {(2 * N - 6) * l_plus + 2 * (N - 2) * sum_k + 2 * nu, false};
  }
  throw IndexError("unknown scenario");
}

std::int64_t cut_class_c1(Scenario s, int n, std::int64_t c1A) {
  return s == Scenario::thm14_side ? c1A - (n - 1) : c1A;
}

IndexValue index_minus(int n, std::int64_t c1A, int g, int g_plus, int l_plus, int nu, std::int64_t sum_k, Scenario s) {
  const auto plus = index_plus(s, n, g_plus, l_plus, sum_k, nu);
  return {index_sum(n, nu, cut_class_c1(s, n, c1A), g) - plus.value, plus.is_bound};
}

std::int64_t required_degree_sum(int n, std::int64_t c1A, int g, int m) {
  return 2 * c1A + 2 * std::int64_t{3 - n} * (g - 1) + 2 * std::int64_t{m};
}

std::int64_t proof_gap(int n, int l_plus, int g_plus, std::int64_t sum_k, int nu) {
  return 2 * std::int64_t{3 - n} * (l_plus - g_plus) - 2 * sum_k - 2 * std::int64_t{nu};
}

std::int64_t thm14_equality_defect(int n, int l_plus, int nu, std::int64_t sum_k) {
  return 4 * std::int64_t{l_plus} + 2 * std::int64_t{n - 2} * (nu - sum_k) - 4 * sum_k;
}

std::string_view to_string(VanishReason r) {
  switch (r) {
    case VanishReason::support:
      return "support";
    case VanishReason::degree_vs_index:
      return "degree-vs-index";
    case VanishReason::not_excluded:
      return "not-excluded";
  }
  return "?";
}

VanishingVerdict component_vanishes(const ComponentProfile& profile, std::span<const int> insertion_degrees,
                                    Scenario s, bool insertions_vanish_on_plus) {
  validate(profile);
  if (profile.side != Side::plus) throw IndexError("component_vanishes expects the plus-side profile");
  if (profile.m_side > 0 && insertions_vanish_on_plus) return {true, VanishReason::support};

  std::int64_t degree = 0;
  for (int d : insertion_degrees) {
    if (d < 0 || d % 2 != 0) throw IndexError("insertion degrees must be even and non-negative");
    degree += d;
  }
  const int m = static_cast<int>(insertion_degrees.size());
  const auto minus = index_minus(profile.n, profile.c1A, profile.g, profile.g_side, profile.l_side, profile.nu(),
                                 profile.sum_k(), s);
  if (degree > minus.value + 2 * m) return {true, VanishReason::degree_vs_index};
  return {false, VanishReason::not_excluded};
}

}  // namespace gwb::index
