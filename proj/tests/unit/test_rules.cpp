#include <doctest.h>

#include "gwb/report.hpp"
#include "gwb/rules.hpp"

#include <sstream>

using namespace gwb;
using namespace gwb::rules;

namespace {

std::vector<Insertion> points(int count, int n) { return std::vector<Insertion>(count, Insertion::point(n)); }

bool has_failed_gate(const RuleApplication& app, std::string_view name) {
  for (const auto& g : app.gates)
    if (!g.passed && g.name.find(name) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("exceptional multiples with a pulled-back insertion") {
  const auto b = blowup_point(2);
  const auto pt = Insertion::pullback(Insertion::point(2));
  CHECK(apply_lemma_1_1({b, 2 * b.curve("e"), 0, {pt}}) == LemmaOutcome::zero);
  CHECK(apply_lemma_1_1({b, b.curve("f") - b.curve("e"), 0, {pt}}) == LemmaOutcome::not_applicable);
  CHECK(apply_lemma_1_1({b, b.curve("e"), 0, {Insertion::exc_dual(), Insertion::exc_dual()}}) ==
        LemmaOutcome::not_applicable);
  CHECK(apply_lemma_1_1({proj_space(2), CurveClass{1}, 0, points(2, 2)}) == LemmaOutcome::not_applicable);
}

TEST_CASE("point blow-up rule") {
  Oracle o;
  const auto p2 = proj_space(2);
  auto app = transform_1_2({p2, CurveClass{2}, 0, points(5, 2)}, o);
  REQUIRE(app.target.has_value());
  CHECK(app.target->A == CurveClass{2, 0});
  CHECK(app.target->insertions.size() == 5);
  CHECK(app.verdict == Verdict::verified);
  CHECK(*app.source_value == ExactRational(1));

  app = transform_1_2({p2, CurveClass{1}, 0, points(2, 2)}, o);
  CHECK(app.verdict == Verdict::verified);

  app = transform_1_2({p2, CurveClass{1}, 2, points(2, 2)}, o);
  CHECK(app.verdict == Verdict::gate_failed);
  CHECK_FALSE(app.target.has_value());
  CHECK(has_failed_gate(app, "g <= 1"));
}

TEST_CASE("low-dimensional rule") {
  Oracle o;
  const auto p2 = proj_space(2);
  for (int d = 1; d <= 4; ++d) {
    const InvariantQuery q{p2, CurveClass{d}, 0, points(3 * d - 1, 2)};
    const auto a = transform_1_3(q, o);
    const auto b = transform_1_2(q, o);
    CHECK(a.verdict == Verdict::verified);
    CHECK(a.source_value == b.source_value);
    CHECK(a.target_value == b.target_value);
  }
  auto app = transform_1_3({p2, CurveClass{3}, 3, points(3, 2)}, o);
  CHECK(app.gates_passed());
  CHECK(app.verdict == Verdict::symbolic_only);

  app = transform_1_3({proj_space(4), CurveClass{1}, 0, points(2, 4)}, o);
  CHECK(app.verdict == Verdict::gate_failed);
  CHECK(has_failed_gate(app, "dim_R <= 6"));
}

TEST_CASE("point-constraint rule") {
  Oracle o;
  const auto p2 = proj_space(2);
  auto app = transform_1_4({p2, CurveClass{3}, 0, points(8, 2)}, o);
  REQUIRE(app.target.has_value());
  CHECK(app.target->A == CurveClass{3, -1});
  CHECK(app.target->insertions.size() == 7);
  CHECK(app.verdict == Verdict::verified);
  CHECK(*app.target_value == ExactRational(12));

  app = transform_1_4({p2, CurveClass{1}, 0, points(2, 2)}, o);
  CHECK(app.target->A == CurveClass{1, -1});
  CHECK(app.verdict == Verdict::verified);

  app = transform_1_4({p2, CurveClass{2}, 0, points(5, 2)}, o);
  CHECK(app.verdict == Verdict::verified);
  CHECK(consumed_degree(app) == 4);

  app = transform_1_4({p2, CurveClass{2}, 0, {Insertion::hyperplane_power(1)}}, o);
  CHECK(app.verdict == Verdict::not_applicable);
}

TEST_CASE("curve blow-up gates") {
  Oracle o;
  const InvariantQuery q{proj_space(3), CurveClass{2}, 0, points(4, 3)};
  auto app = transform_1_5(q, BlowupLocus::curve(3, 1, -3), o);
  CHECK(app.gates_passed());
  CHECK(app.verdict == Verdict::symbolic_only);
  REQUIRE(app.budget.has_value());
  CHECK(app.budget->scenario == index::Scenario::curve_case1);

  app = transform_1_5(q, BlowupLocus::curve(3, 0, -1), o);
  CHECK(app.verdict == Verdict::gate_failed);
  CHECK_FALSE(app.target.has_value());

  app = transform_1_5(q, BlowupLocus::curve(3, 0, 0), o);
  CHECK(app.gates_passed());
  CHECK(app.budget->is_bound);

  app = transform_1_5({proj_space(2), CurveClass{1}, 0, points(2, 2)}, BlowupLocus::curve(2, 1, 0), o);
  CHECK(app.verdict == Verdict::gate_failed);
}

TEST_CASE("surface blow-up gates") {
  Oracle o;
  using Shape = BlowupLocus::Shape;
  const auto p4 = proj_space(4);
  const InvariantQuery deep{p4, CurveClass{1}, 0, points(2, 4)};
  CHECK(transform_1_6(deep, BlowupLocus::surface(4, Shape::k3), o).verdict == Verdict::symbolic_only);
  CHECK(transform_1_6(deep, BlowupLocus::surface(4, Shape::product_positive_genus, 1, 1), o).gates_passed());
  CHECK(transform_1_6(deep, BlowupLocus::surface(4, Shape::product_positive_genus, 0, 1), o).verdict ==
        Verdict::gate_failed);

  InvariantQuery shallow = deep;
  shallow.insertions.push_back(Insertion::hyperplane_power(1));
  auto app = transform_1_6(shallow, BlowupLocus::surface(4, Shape::k3), o);
  CHECK(app.verdict == Verdict::gate_failed);
  CHECK(has_failed_gate(app, "supported away"));
  shallow.insertions.back() = shallow.insertions.back().with_support_away();
  CHECK(transform_1_6(shallow, BlowupLocus::surface(4, Shape::k3), o).gates_passed());
}

TEST_CASE("targets only exist when gates pass") {
  Oracle o;
  for (auto rule : kAllRules) {
    for (const auto& app : verify_rule(rule, {1, 3}, o).rows) {
      if (app.verdict == Verdict::gate_failed) CHECK_FALSE(app.target.has_value());
      if (app.target) CHECK(app.gates_passed());
    }
  }
}

TEST_CASE("verify suites") {
  Oracle o;
  auto report = verify_rule(Rule::thm_1_4, {1, 6}, o);
  CHECK(report.rows.size() == 6);
  CHECK(report.pass());
  for (const auto& r : report.rows) CHECK(r.verdict == Verdict::verified);

  report = verify_rule(Rule::lemma_1_1, {1, 5}, o);
  CHECK(report.rows.size() == 5);
  for (const auto& r : report.rows) CHECK(r.verdict == Verdict::zero);

  report = verify_rule(Rule::corollary_e, {1, 6}, o);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].verdict == Verdict::verified);
  CHECK(*report.rows[0].source_value == ExactRational(1));

  CHECK(corollary_e(3, o).verdict == Verdict::gate_failed);
  CHECK_THROWS(verify_parameters(Rule::thm_1_2, {3, 1}));
}

TEST_CASE("rule names") {
  for (auto r : kAllRules) CHECK(rule_from_string(to_string(r)) == r);
  CHECK(to_string(Rule::thm_1_4) == "thm1-4");
  CHECK_THROWS(rule_from_string("thm9-9"));
}

TEST_CASE("report formats") {
  Oracle o;
  const auto rows = verify_rule(Rule::thm_1_2, {1, 2}, o).rows;
  std::ostringstream json, csv, text;
  report::write_json_lines(json, rows);
  report::write_csv(csv, rows);
  report::write_text(text, rows);
  const auto first = json.str().substr(0, json.str().find('\n'));
  const auto j = nlohmann::json::parse(first);
  CHECK(j["rule"] == "thm1-2");
  CHECK(j["verdict"] == "verified");
  CHECK(j["source_value"] == "1");
  CHECK(csv.str().starts_with("rule,"));
  CHECK(text.str().find("verified") != std::string::npos);
}
