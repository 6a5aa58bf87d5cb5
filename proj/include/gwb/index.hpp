#pragma once

// Fredholm-index bookkeeping for a curve split by symplectic cutting, and the
// degree-vs-index test that rules out every cut component except the one
// lying entirely on the minus side.
//
// All quantities are real (even) dimensions and exact integers.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace gwb::index {

class IndexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Side { plus, minus };

// Which closed-form plus-side index applies. Each names the cut geometry in
// which the formula was derived.
enum class Scenario {
  point_blowup,             // cut at a point of M; plus side is P^n
  blowup_exceptional_side,  // second cut of a curve blow-up around E (lower bound)
  thm14_side,               // cut at the blown-up point of M~; plus side is Bl P^n
  curve_case1,              // curve of genus >= 1
  curve_case2_lower_bound,  // rational curve with c1(M)(C) >= 0 (lower bound)
  surface,                  // product of positive-genus curves, K3 or torus
};

inline constexpr Scenario kAllScenarios[] = {Scenario::point_blowup,  Scenario::blowup_exceptional_side,
                                             Scenario::thm14_side,    Scenario::curve_case1,
                                             Scenario::curve_case2_lower_bound, Scenario::surface};

std::string_view to_string(Scenario s);
Scenario scenario_from_string(std::string_view s);

// Lower-bound scenarios only bound Ind(D_{u+}) from below.
bool is_bound(Scenario s);

struct ComponentProfile {
  int n = 2;
  Side side = Side::plus;
  std::int64_t c1A = 0;  // c1 of the total class A of M
  int g = 0;
  int g_side = 0;
  int l_side = 1;
  int m_side = 0;
  std::vector<int> ks;  // contact multiplicities k_1..k_nu

  int nu() const { return static_cast<int>(ks.size()); }
  std::int64_t sum_k() const;
};

// Throws IndexError describing the first violated invariant.
void validate(const ComponentProfile& p);

struct IndexValue {
  std::int64_t value = 0;
  // plus side: value is a lower bound; minus side: an upper bound.
  bool is_bound = false;
  friend bool operator==(const IndexValue&, const IndexValue&) = default;
};

// 2(n-1) nu + 2 c1(A) + 2(3-n)(g-1)
std::int64_t index_sum(int n, int nu, std::int64_t c1A, int g);

IndexValue index_plus(Scenario s, int n, int g_plus, int l_plus, std::int64_t sum_k, int nu);

// index_sum(n, nu, cut_class_c1, g) - index_plus.
IndexValue index_minus(int n, std::int64_t c1A, int g, int g_plus, int l_plus, int nu, std::int64_t sum_k, Scenario s);

// c1 of the class that is actually cut. Equal to c1A except in the Bl P^n
// scenario, where the cut class is p!(A) - e and c1 drops by n - 1.
std::int64_t cut_class_c1(Scenario s, int n, std::int64_t c1A);

// Total real degree that insertions must have for a possibly nonzero
// invariant: 2 c1(A) + 2(3-n)(g-1) + 2m.
std::int64_t required_degree_sum(int n, std::int64_t c1A, int g, int m);

// 2(3-n)(l+ - g+) - 2 sum k - 2 nu; negative under the cutting hypotheses.
std::int64_t proof_gap(int n, int l_plus, int g_plus, std::int64_t sum_k, int nu);

// 4 l+ + 2(n-2)(nu - sum k) - 4 sum k; zero exactly when l+ = nu = sum k.
std::int64_t thm14_equality_defect(int n, int l_plus, int nu, std::int64_t sum_k);

enum class VanishReason { support, degree_vs_index, not_excluded };
std::string_view to_string(VanishReason r);

struct VanishingVerdict {
  bool vanishes = false;
  VanishReason reason = VanishReason::not_excluded;
};

// `profile` describes the plus side (g+, l+, m+); `insertion_degrees` are
// the minus-side insertions. A component vanishes when a marked point sits
// on the plus side while every insertion restricts to zero there, or when
// the insertion degree exceeds Ind(D_{u-}) + 2m. Bound scenarios only
// report vanishing when the inequality is strict against the bound.
VanishingVerdict component_vanishes(const ComponentProfile& profile, std::span<const int> insertion_degrees,
                                    Scenario s, bool insertions_vanish_on_plus = true);

}  // namespace gwb::index
