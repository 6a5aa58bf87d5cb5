#include "gwb/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwb::rules {

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::lemma_1_1:
      return "lemma1-1";
    case Rule::thm_1_2:
      return "thm1-2";
    case Rule::thm_1_3:
      return "thm1-3";
    case Rule::thm_1_4:
      return "thm1-4";
    case Rule::thm_1_5:
      return "thm1-5";
    case Rule::thm_1_6:
      return "thm1-6";
    case Rule::corollary_e:
      return "corollary-e";
  }
  return "?";
}

Rule rule_from_string(std::string_view s) {
  for (auto r : kAllRules)
    if (to_string(r) == s) return r;
  throw std::invalid_argument("unknown rule '" + std::string(s) + "'");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::mismatch:
      return "mismatch";
    case Verdict::zero:
      return "zero";
    case Verdict::gate_failed:
      return "gate-failed";
    case Verdict::symbolic_only:
      return "symbolic-only";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

std::string_view to_string(BlowupLocus::Shape s) {
  switch (s) {
    case BlowupLocus::Shape::product_positive_genus:
      return "product";
    case BlowupLocus::Shape::k3:
      return "K3";
    case BlowupLocus::Shape::torus:
      return "torus";
    case BlowupLocus::Shape::other:
      return "other";
  }
  return "?";
}

bool RuleApplication::gates_passed() const {
  return std::all_of(gates.begin(), gates.end(), [](const Gate& g) { return g.passed; });
}

BlowupLocus BlowupLocus::curve(int ambient_n, int g0, std::int64_t c1M_on_C) {
  if (g0 < 0) throw std::invalid_argument("curve genus must be >= 0");
  if (ambient_n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  BlowupLocus l;
  l.kind = Kind::curve;
  l.ambient_n = ambient_n;
  l.g0 = g0;
  l.c1M_on_C = c1M_on_C;
  return l;
}

BlowupLocus BlowupLocus::surface(int ambient_n, Shape shape, int genus1, int genus2) {
  if (ambient_n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (genus1 < 0 || genus2 < 0) throw std::invalid_argument("factor genera must be >= 0");
  BlowupLocus l;
  l.kind = Kind::surface;
  l.ambient_n = ambient_n;
  l.shape = shape;
  l.factor_genus_1 = genus1;
  l.factor_genus_2 = genus2;
  return l;
}

std::string BlowupLocus::to_string() const {
  switch (kind) {
    case Kind::point:
      return "point";
    case Kind::curve:
      return "curve(g0=" + std::to_string(g0) + ",c1=" + std::to_string(c1M_on_C) + ")";
    case Kind::surface:
      if (shape == Shape::product_positive_genus)
        return "surface(product," + std::to_string(factor_genus_1) + "x" + std::to_string(factor_genus_2) + ")";
      return "surface(" + std::string(rules::to_string(shape)) + ")";
  }
  return "?";
}

LemmaOutcome apply_lemma_1_1(const InvariantQuery& q) {
  if (q.manifold.kind() != ManifoldKind::blowup_point) return LemmaOutcome::not_applicable;
  if (q.A[0] != 0 || q.A[1] < 1) return LemmaOutcome::not_applicable;
  const bool has_pullback = std::any_of(q.insertions.begin(), q.insertions.end(),
                                        [](const Insertion& i) { return i.kind() == InsertionKind::pullback; });
  return has_pullback ? LemmaOutcome::zero : LemmaOutcome::not_applicable;
}

namespace {

std::vector<Insertion> pull_back(const std::vector<Insertion>& insertions) {
  std::vector<Insertion> out;
  out.reserve(insertions.size());
  for (const auto& ins : insertions) out.push_back(Insertion::pullback(ins));
  return out;
}

std::int64_t required_for(const InvariantQuery& q) {
  return index::required_degree_sum(q.manifold.n(), c1_eval(q.manifold, q.A), q.genus,
                                    static_cast<int>(q.insertions.size()));
}

void add_gate(RuleApplication& app, std::string name, bool passed) { app.gates.push_back({std::move(name), passed}); }

void add_bookkeeping_gate(RuleApplication& app) {
  const auto lhs = required_for(app.source);
  const auto rhs = required_for(*app.target) + consumed_degree(app);
  add_gate(app, "degree bookkeeping", lhs == rhs);
}

void compare_numeric(RuleApplication& app, Oracle& oracle) {
  app.source_value = numeric_value(oracle.evaluate(app.source));
  app.target_value = numeric_value(oracle.evaluate(*app.target));
  if (!app.gates_passed()) {
    app.verdict = Verdict::mismatch;
  } else if (app.source_value && app.target_value) {
    app.verdict = *app.source_value == *app.target_value ? Verdict::verified : Verdict::mismatch;
  } else {
    app.verdict = Verdict::symbolic_only;
  }
}

// Minimal cut component: one plus-side component with a single simple end.
IndexBudget audit(index::Scenario scenario, const InvariantQuery& q, std::span<const int> minus_degrees,
                  std::int64_t c1A) {
  index::ComponentProfile plus;
  plus.n = q.manifold.n();
  plus.side = index::Side::plus;
  plus.c1A = c1A;
  plus.g = q.genus;
  plus.g_side = 0;
  plus.l_side = 1;
  plus.m_side = 0;
  plus.ks = {1};
  IndexBudget b;
  b.scenario = scenario;
  const auto ip = index::index_plus(scenario, plus.n, plus.g_side, plus.l_side, plus.sum_k(), plus.nu());
  const auto im = index::index_minus(plus.n, c1A, plus.g, plus.g_side, plus.l_side, plus.nu(), plus.sum_k(), scenario);
  b.index_plus = ip.value;
  b.index_minus = im.value;
  b.is_bound = ip.is_bound;
  for (int d : minus_degrees) b.degree_sum += d;
  b.component_excluded = index::component_vanishes(plus, minus_degrees, scenario).vanishes;
  return b;
}

std::vector<int> degrees_of(const std::vector<Insertion>& insertions) {
  std::vector<int> out;
  for (const auto& i : insertions) out.push_back(i.real_degree());
  return out;
}

RuleApplication point_rewrite(Rule rule, const InvariantQuery& q, Oracle& oracle) {
  RuleApplication app;
  app.rule = rule;
  app.source = q;
  add_gate(app, "blow-up of P^n at a point", q.manifold.kind() == ManifoldKind::proj_space);
  if (rule == Rule::thm_1_2) add_gate(app, "g <= 1", q.genus <= 1);
  if (rule == Rule::thm_1_3) add_gate(app, "dim_R <= 6", q.manifold.real_dim() <= 6);
  if (!app.gates_passed()) {
    app.verdict = Verdict::gate_failed;
    return app;
  }
  const Manifold blown = blowup_point(q.manifold.n());
  app.target = InvariantQuery{blown, p_shriek(q.manifold, blown, q.A), q.genus, pull_back(q.insertions)};
  add_bookkeeping_gate(app);
  const auto degrees = degrees_of(q.insertions);
  app.budget = audit(index::Scenario::point_blowup, q, degrees, c1_eval(q.manifold, q.A));
  if (rule == Rule::thm_1_3 && q.genus != 0) {
    app.notes.push_back("numeric oracles cover genus 0 only");
    app.verdict = app.gates_passed() ? Verdict::symbolic_only : Verdict::mismatch;
    return app;
  }
  compare_numeric(app, oracle);
  return app;
}

}  // namespace

std::int64_t consumed_degree(const RuleApplication& app) {
  return app.rule == Rule::thm_1_4 ? std::int64_t{2} * app.source.manifold.n() : 0;
}

RuleApplication transform_1_2(const InvariantQuery& q, Oracle& oracle) {
  return point_rewrite(Rule::thm_1_2, q, oracle);
}

RuleApplication transform_1_3(const InvariantQuery& q, Oracle& oracle) {
  return point_rewrite(Rule::thm_1_3, q, oracle);
}

RuleApplication transform_1_4(const InvariantQuery& q, Oracle& oracle) {
  RuleApplication app;
  app.rule = Rule::thm_1_4;
  app.source = q;
  const auto distinguished = std::find_if(q.insertions.rbegin(), q.insertions.rend(), [](const Insertion& i) {
    return i.kind() == InsertionKind::point;
  });
  if (distinguished == q.insertions.rend()) {
    add_gate(app, "point insertion present", false);
    app.verdict = Verdict::not_applicable;
    return app;
  }
  add_gate(app, "point insertion present", true);
  add_gate(app, "blow-up of P^n at a point", q.manifold.kind() == ManifoldKind::proj_space);
  add_gate(app, "genus 0", q.genus == 0);
  if (!app.gates_passed()) {
    app.verdict = Verdict::gate_failed;
    return app;
  }
  std::vector<Insertion> rest = q.insertions;
  rest.erase(rest.begin() + (std::distance(distinguished, q.insertions.rend()) - 1));
  const Manifold blown = blowup_point(q.manifold.n());
  const CurveClass target_class = p_shriek(q.manifold, blown, q.A) - blown.curve("e");
  app.target = InvariantQuery{blown, target_class, 0, pull_back(rest)};
  add_bookkeeping_gate(app);
  const auto degrees = degrees_of(app.target->insertions);
  app.budget = audit(index::Scenario::thm14_side, q, degrees, c1_eval(q.manifold, q.A));
  compare_numeric(app, oracle);
  return app;
}

namespace {

RuleApplication submanifold_rewrite(Rule rule, const InvariantQuery& q, const BlowupLocus& locus, Oracle& oracle) {
  RuleApplication app;
  app.rule = rule;
  app.source = q;
  const bool is_curve = rule == Rule::thm_1_5;
  const int locus_dim = is_curve ? 1 : 2;
  add_gate(app, "genus 0", q.genus == 0);
  add_gate(app, is_curve ? "locus is a curve" : "locus is a surface",
           locus.kind == (is_curve ? BlowupLocus::Kind::curve : BlowupLocus::Kind::surface));
  add_gate(app, "locus lies in M", locus.ambient_n == q.manifold.n() && q.manifold.has_lattice());
  add_gate(app, "centre has complex codimension >= 2", q.manifold.n() - locus_dim >= 2);

  if (is_curve) {
    add_gate(app, "g0 >= 1 or (g0 = 0 and c1(M)(C) >= 0)", locus.g0 >= 1 || (locus.g0 == 0 && locus.c1M_on_C >= 0));
    const auto low = std::count_if(q.insertions.begin(), q.insertions.end(),
                                   [](const Insertion& i) { return i.real_degree() <= 2; });
    if (low > 0)
      app.notes.push_back(std::to_string(low) +
                          " insertion(s) of degree <= 2 reduce away by the divisor and fundamental-class axioms");
  } else {
    switch (locus.shape) {
      case BlowupLocus::Shape::product_positive_genus:
        add_gate(app, "S = C1 x C2 with positive genera", locus.factor_genus_1 >= 1 && locus.factor_genus_2 >= 1);
        break;
      case BlowupLocus::Shape::k3:
      case BlowupLocus::Shape::torus:
        add_gate(app, "S is a K3 surface or a torus", true);
        break;
      case BlowupLocus::Shape::other:
        add_gate(app, "S is C1 x C2 (positive genera), K3 or a torus", false);
        break;
    }
    for (std::size_t i = 0; i < q.insertions.size(); ++i) {
      const auto& ins = q.insertions[i];
      const auto tag = "insertion #" + std::to_string(i + 1) + " (" + ins.to_string() + ")";
      add_gate(app, tag + " has degree >= 2", ins.real_degree() >= 2);
      if (ins.real_degree() == 2) add_gate(app, tag + " supported away from S", ins.supported_away_from_locus());
    }
    app.notes.push_back("degree-2 insertions satisfy both branches of the hypothesis; they are required to be "
                        "supported away from S");
  }

  if (!app.gates_passed()) {
    app.verdict = Verdict::gate_failed;
    return app;
  }

  const Manifold blown = blowup_along(q.manifold, is_curve ? "C" : "S", locus_dim);
  app.target = InvariantQuery{blown, p_shriek(q.manifold, blown, q.A), 0, pull_back(q.insertions)};
  add_bookkeeping_gate(app);

  index::Scenario scenario = index::Scenario::surface;
  if (is_curve) scenario = locus.g0 >= 1 ? index::Scenario::curve_case1 : index::Scenario::curve_case2_lower_bound;
  const auto degrees = degrees_of(q.insertions);
  app.budget = audit(scenario, q, degrees, c1_eval(q.manifold, q.A));

  app.source_value = numeric_value(oracle.evaluate(q));
  app.notes.push_back("no numeric oracle for blow-ups along submanifolds");
  app.verdict = app.gates_passed() ? Verdict::symbolic_only : Verdict::mismatch;
  return app;
}

}  // namespace

RuleApplication transform_1_5(const InvariantQuery& q, const BlowupLocus& locus, Oracle& oracle) {
  return submanifold_rewrite(Rule::thm_1_5, q, locus, oracle);
}

RuleApplication transform_1_6(const InvariantQuery& q, const BlowupLocus& locus, Oracle& oracle) {
  return submanifold_rewrite(Rule::thm_1_6, q, locus, oracle);
}

RuleApplication lemma_1_1_row(const InvariantQuery& q, Oracle& oracle) {
  RuleApplication app;
  app.rule = Rule::lemma_1_1;
  app.source = q;
  const bool on_blowup = q.manifold.kind() == ManifoldKind::blowup_point;
  add_gate(app, "blow-up at a point", on_blowup);
  add_gate(app, "A = r e with r >= 1", on_blowup && q.A[0] == 0 && q.A[1] >= 1);
  add_gate(app, "a pulled-back insertion",
           std::any_of(q.insertions.begin(), q.insertions.end(),
                       [](const Insertion& i) { return i.kind() == InsertionKind::pullback; }));
  if (!app.gates_passed()) {
    app.verdict = Verdict::not_applicable;
    return app;
  }
  app.target_is_zero = true;
  app.target_value = ExactRational(0);
  const auto result = oracle.evaluate(q);
  app.source_value = numeric_value(result);
  const auto* zero = std::get_if<Zero>(&result);
  app.verdict = zero && zero->reason == "Lemma 1.1" ? Verdict::zero : Verdict::mismatch;
  return app;
}

RuleApplication corollary_e(int n, Oracle& oracle) {
  RuleApplication app;
  app.rule = Rule::corollary_e;
  const Manifold blown = blowup_point(n);
  app.source = InvariantQuery{blown, blown.curve("e"), 0, {Insertion::exc_dual(), Insertion::exc_dual()}};
  app.params = {{"n", std::to_string(n)}};
  add_gate(app, "n = 2 (exceptional class read as PD(E))", n == 2);
  if (!app.gates_passed()) {
    app.notes.push_back("for n > 2 the class [pt]_E has an ambiguous degree; not evaluated");
    app.verdict = Verdict::gate_failed;
    return app;
  }
  app.source_value = numeric_value(oracle.evaluate(app.source));
  app.target_value = ExactRational(1);
  app.verdict = app.source_value && *app.source_value == *app.target_value ? Verdict::verified : Verdict::mismatch;
  return app;
}

bool VerifyReport::pass() const {
  return std::none_of(rows.begin(), rows.end(), [](const RuleApplication& r) { return r.verdict == Verdict::mismatch; });
}

std::vector<int> verify_parameters(Rule rule, const VerifyRange& range) {
  if (rule == Rule::corollary_e) return {2};
  if (rule == Rule::thm_1_6) return {1};
  if (range.lo < 1 || range.hi < range.lo) throw std::invalid_argument("verification range must satisfy 1 <= lo <= hi");
  std::vector<int> out;
  for (int v = range.lo; v <= range.hi; ++v) out.push_back(v);
  return out;
}

namespace {

std::vector<Insertion> points(int count, int n) { return std::vector<Insertion>(count, Insertion::point(n)); }

void tag(RuleApplication& app, std::vector<std::pair<std::string, std::string>> params) {
  app.params = std::move(params);
}

}  // namespace

std::vector<RuleApplication> verify_rows(Rule rule, int p, Oracle& oracle) {
  const std::string ps = std::to_string(p);
  std::vector<RuleApplication> rows;
  switch (rule) {
    case Rule::thm_1_2:
    case Rule::thm_1_3: {
      const Manifold p2 = proj_space(2);
      const InvariantQuery q{p2, CurveClass{p}, 0, points(3 * p - 1, 2)};
      auto app = rule == Rule::thm_1_2 ? transform_1_2(q, oracle) : transform_1_3(q, oracle);
      tag(app, {{"d", ps}});
      rows.push_back(std::move(app));
      break;
    }
    case Rule::thm_1_4: {
      const Manifold p2 = proj_space(2);
      const InvariantQuery q{p2, CurveClass{p}, 0, points(3 * p - 1, 2)};
      auto app = transform_1_4(q, oracle);
      tag(app, {{"d", ps}});
      rows.push_back(std::move(app));
      break;
    }
    case Rule::lemma_1_1: {
      const Manifold blown = blowup_point(2);
      const InvariantQuery q{blown, CurveClass{0, p}, 0, {Insertion::pullback(Insertion::point(2))}};
      auto app = lemma_1_1_row(q, oracle);
      tag(app, {{"r", ps}});
      rows.push_back(std::move(app));
      break;
    }
    case Rule::corollary_e:
      rows.push_back(corollary_e(p, oracle));
      break;
    case Rule::thm_1_5: {
      // P^3: 2d point insertions match the expected dimension.
      const Manifold p3 = proj_space(3);
      const InvariantQuery q{p3, CurveClass{p}, 0, points(2 * p, 3)};
      for (const auto& locus : {BlowupLocus::curve(3, 0, -1), BlowupLocus::curve(3, 0, 0), BlowupLocus::curve(3, 0, 4),
                                BlowupLocus::curve(3, 1, -2), BlowupLocus::curve(3, 2, 0)}) {
        auto app = transform_1_5(q, locus, oracle);
        tag(app, {{"d", ps}, {"locus", locus.to_string()}});
        rows.push_back(std::move(app));
      }
      break;
    }
    case Rule::thm_1_6: {
      // Lines in P^4: (pt, pt) and (pt, pt, H) both have the expected dimension.
      const Manifold p4 = proj_space(4);
      using Shape = BlowupLocus::Shape;
      const std::vector<std::pair<std::string, std::vector<Insertion>>> variants = {
          {"pt,pt", points(2, 4)},
          {"pt,pt,H@away", {Insertion::point(4), Insertion::point(4), Insertion::hyperplane_power(1).with_support_away()}},
          {"pt,pt,H", {Insertion::point(4), Insertion::point(4), Insertion::hyperplane_power(1)}},
      };
      for (const auto& locus : {BlowupLocus::surface(4, Shape::product_positive_genus, 1, 2),
                                BlowupLocus::surface(4, Shape::product_positive_genus, 0, 1),
                                BlowupLocus::surface(4, Shape::k3), BlowupLocus::surface(4, Shape::torus),
                                BlowupLocus::surface(4, Shape::other)}) {
        for (const auto& [name, insertions] : variants) {
          const InvariantQuery q{p4, CurveClass{p}, 0, insertions};
          auto app = transform_1_6(q, locus, oracle);
          tag(app, {{"d", ps}, {"locus", locus.to_string()}, {"insertions", name}});
          rows.push_back(std::move(app));
        }
      }
      break;
    }
  }
  return rows;
}

VerifyReport verify_rule(Rule rule, const VerifyRange& range, Oracle& oracle) {
  VerifyReport report;
  for (int p : verify_parameters(rule, range)) {
    auto rows = verify_rows(rule, p, oracle);
    std::move(rows.begin(), rows.end(), std::back_inserter(report.rows));
  }
  return report;
}

}  // namespace gwb::rules
