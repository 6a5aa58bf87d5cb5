#pragma once

// Blow-up comparison rules as gated rewrites between invariant queries.
// A rewrite only produces a target when every gate passes; numeric
// verification compares the oracle's values on both sides exactly.

#include "gwb/index.hpp"
#include "gwb/oracle.hpp"
#include "gwb/query.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gwb::rules {

enum class Rule { lemma_1_1, thm_1_2, thm_1_3, thm_1_4, thm_1_5, thm_1_6, corollary_e };

inline constexpr Rule kAllRules[] = {Rule::lemma_1_1, Rule::thm_1_2, Rule::thm_1_3,    Rule::thm_1_4,
                                     Rule::thm_1_5,   Rule::thm_1_6, Rule::corollary_e};

// CLI names: "lemma1-1", "thm1-2", ..., "corollary-e".
std::string_view to_string(Rule r);
Rule rule_from_string(std::string_view s);

enum class Verdict {
  verified,        // both sides exact and equal
  mismatch,        // both sides exact and different
  zero,            // rule asserts vanishing and the oracle agrees
  gate_failed,     // a hypothesis does not hold; no target
  symbolic_only,   // gates pass, at least one side has no numeric value
  not_applicable,  // the rule's shape does not match the query
};
std::string_view to_string(Verdict v);

struct Gate {
  std::string name;
  bool passed = false;
};

// Index audit attached to the curve and surface rewrites: the minimal cut
// component (l+ = nu = sum k = 1) and whether the degree-vs-index test
// excludes it.
struct IndexBudget {
  index::Scenario scenario = index::Scenario::curve_case1;
  std::int64_t index_plus = 0;
  std::int64_t index_minus = 0;
  bool is_bound = false;
  std::int64_t degree_sum = 0;
  bool component_excluded = false;
};

struct RuleApplication {
  Rule rule = Rule::thm_1_2;
  InvariantQuery source;
  std::optional<InvariantQuery> target;
  bool target_is_zero = false;
  std::vector<Gate> gates;
  Verdict verdict = Verdict::not_applicable;
  std::optional<ExactRational> source_value;
  std::optional<ExactRational> target_value;
  std::optional<IndexBudget> budget;
  std::vector<std::string> notes;
  // Ordered row parameters for reports, e.g. {"d", "3"}.
  std::vector<std::pair<std::string, std::string>> params;

  bool gates_passed() const;
};

struct BlowupLocus {
  enum class Kind { point, curve, surface };
  enum class Shape { product_positive_genus, k3, torus, other };

  Kind kind = Kind::point;
  int ambient_n = 2;
  // curve
  int g0 = 0;
  std::int64_t c1M_on_C = 0;
  // surface; genera of the two factors when shape is a product
  Shape shape = Shape::other;
  int factor_genus_1 = 0;
  int factor_genus_2 = 0;

  static BlowupLocus curve(int ambient_n, int g0, std::int64_t c1M_on_C);
  static BlowupLocus surface(int ambient_n, Shape shape, int genus1 = 0, int genus2 = 0);
  std::string to_string() const;
};

std::string_view to_string(BlowupLocus::Shape s);

enum class LemmaOutcome { zero, not_applicable };
LemmaOutcome apply_lemma_1_1(const InvariantQuery& q);

RuleApplication transform_1_2(const InvariantQuery& q, Oracle& oracle);
RuleApplication transform_1_3(const InvariantQuery& q, Oracle& oracle);
RuleApplication transform_1_4(const InvariantQuery& q, Oracle& oracle);
RuleApplication transform_1_5(const InvariantQuery& q, const BlowupLocus& locus, Oracle& oracle);
RuleApplication transform_1_6(const InvariantQuery& q, const BlowupLocus& locus, Oracle& oracle);
RuleApplication lemma_1_1_row(const InvariantQuery& q, Oracle& oracle);
// Psi^{Bl P^n}_e(PD(E), PD(E)) against the stated value 1; numeric for n = 2.
RuleApplication corollary_e(int n, Oracle& oracle);

// Degree of the insertions consumed by the rewrite: 2n for the point
// removed by the point-constraint rule, 0 otherwise.
std::int64_t consumed_degree(const RuleApplication& app);

struct VerifyRange {
  int lo = 1;
  int hi = 6;
};

struct VerifyReport {
  std::vector<RuleApplication> rows;
  bool pass() const;
};

// Parameter values each rule iterates over for the given range.
std::vector<int> verify_parameters(Rule rule, const VerifyRange& range);

// One row batch for one parameter value; rows are independent so callers
// may fan parameter values out to workers with private oracles.
std::vector<RuleApplication> verify_rows(Rule rule, int parameter, Oracle& oracle);

VerifyReport verify_rule(Rule rule, const VerifyRange& range, Oracle& oracle);

}  // namespace gwb::rules
