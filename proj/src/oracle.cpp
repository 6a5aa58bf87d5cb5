#include "gwb/oracle.hpp"

#include "gwb/index.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

namespace gwb {

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

struct BlowupClass {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c1() const { return 3 * a + b; }
  // Number of point insertions, c1 - 1.
  std::int64_t points() const { return c1() - 1; }
  friend auto operator<=>(const BlowupClass&, const BlowupClass&) = default;
};

bool is_seed(const BlowupClass& c) {
  return (c.a == 0 && c.b == 1) || (c.a == 1 && c.b == -1) || (c.a == 1 && c.b == 0);
}

// Supported classes with c1 <= max_c1, ordered by (c1, a, b).
std::vector<BlowupClass> supported_up_to(std::int64_t max_c1) {
  std::vector<BlowupClass> out;
  if (max_c1 >= 1) out.push_back({0, 1});
  for (std::int64_t a = 1; 2 * a <= max_c1; ++a)
    for (std::int64_t b = -a; b <= 0; ++b)
      if (3 * a + b <= max_c1) out.push_back({a, b});
  std::sort(out.begin(), out.end(), [](const BlowupClass& x, const BlowupClass& y) {
    return std::tuple(x.c1(), x.a, x.b) < std::tuple(y.c1(), y.a, y.b);
  });
  return out;
}

std::string blowup_key(const BlowupClass& c) {
  const std::int64_t coeffs[] = {c.a, c.b};
  return MemoTable::key(kBlowupKey, coeffs);
}

std::string kontsevich_key(std::int64_t d) {
  const std::int64_t coeffs[] = {d};
  return MemoTable::key(kKontsevichKey, coeffs);
}

}  // namespace

bool blowup_class_supported(std::int64_t a, std::int64_t b) {
  if (a == 0) return b == 1;
  return a >= 1 && b >= -a && b <= 0;
}

std::optional<ExactRational> numeric_value(const EvalResult& r) {
  if (const auto* e = std::get_if<Exact>(&r)) return e->value;
  if (std::holds_alternative<Zero>(r)) return ExactRational(0);
  return std::nullopt;
}

std::string describe(const EvalResult& r) {
  if (const auto* e = std::get_if<Exact>(&r)) return e->value.to_string();
  if (const auto* z = std::get_if<Zero>(&r)) return "0 (" + z->reason + ")";
  const auto& s = std::get<Symbolic>(r);
  if (s.scalar == ExactRational(1)) return "symbolic " + s.query.to_string();
  return "symbolic " + s.scalar.to_string() + " * " + s.query.to_string();
}

Oracle::Oracle() : memo_(std::make_shared<MemoTable>()) {}

Oracle::Oracle(std::shared_ptr<MemoTable> memo) : memo_(std::move(memo)) {
  if (!memo_) memo_ = std::make_shared<MemoTable>();
}

ExactRational Oracle::kontsevich_p2(int d) {
  if (d <= 0) throw OracleError("Kontsevich recursion needs d >= 1, got " + std::to_string(d));
  if (auto hit = memo_->find(kontsevich_key(d))) return *hit;

  std::vector<ExactRational> n(static_cast<std::size_t>(d) + 1);
  for (std::int64_t k = 1; k <= d; ++k) {
    if (auto hit = memo_->find(kontsevich_key(k))) {
      n[k] = *hit;
      continue;
    }
    if (k == 1) {
      n[k] = 1;
    } else {
      // N_k = sum_{k1+k2=k} N_k1 N_k2 k1^2 k2 [k2 C(3k-4, 3k1-2) - k1 C(3k-4, 3k1-1)]
      ExactRational total = 0;
      for (std::int64_t k1 = 1; k1 < k; ++k1) {
        const std::int64_t k2 = k - k1;
        const BigInt weight = BigInt(k1 * k1 * k2) * (k2 * binomial(3 * k - 4, 3 * k1 - 2) -
                                                      k1 * binomial(3 * k - 4, 3 * k1 - 1));
        total += n[k1] * n[k2] * ExactRational(weight);
      }
      n[k] = total;
    }
    memo_->insert(kontsevich_key(k), n[k]);
  }
  return n[d];
}

ExactRational Oracle::wdvv_f1(std::int64_t a, std::int64_t b) {
  const Manifold blowup = blowup_point(2);
  const CurveClass beta{a, b};
  const bool effective = (a == 0 && b > 0) || mori_decompose(blowup, beta).has_value();
  if (!effective) throw OracleError("class " + format_curve(blowup, beta) + " is not effective");
  const BlowupClass target{a, b};
  if (target.points() < 0)
    throw OracleError("class " + format_curve(blowup, beta) + " has c1 - 1 < 0 point insertions");
  if (!blowup_class_supported(a, b)) return 0;
  if (auto hit = memo_->find(blowup_key(target))) return *hit;

  const auto classes = supported_up_to(target.c1());
  std::map<BlowupClass, ExactRational> values;
  for (const auto& beta_i : classes) {
    if (auto hit = memo_->find(blowup_key(beta_i))) {
      values[beta_i] = *hit;
      continue;
    }
    ExactRational value;
    if (is_seed(beta_i)) {
      value = 1;
    } else {
      // WDVV in the (h, h, pt, pt) slot; x = h.beta, y = E.beta.
      const std::int64_t n = beta_i.points();
      ExactRational total = 0;
      for (const auto& [b1, v1] : values) {
        const BlowupClass b2{beta_i.a - b1.a, beta_i.b - b1.b};
        if (!blowup_class_supported(b2.a, b2.b)) continue;
        auto it = values.find(b2);
        if (it == values.end()) continue;
        const std::int64_t x1 = b1.a, y1 = -b1.b, x2 = b2.a, y2 = -b2.b;
        const std::int64_t n1 = b1.points();
        const BigInt weight = BigInt(x1 * x1 * x2 * x2 - x1 * x2 * y1 * y2) * binomial(n - 3, n1 - 1) -
                              BigInt(x1 * x1 * x1 * x2 - x1 * x1 * y1 * y2) * binomial(n - 3, n1);
        total += v1 * it->second * ExactRational(weight);
      }
      value = total;
    }
    values[beta_i] = value;
    memo_->insert(blowup_key(beta_i), value);
  }
  return values.at(target);
}

ExactRational Oracle::pn_three_point(int n, int a, int b, int c, int d) {
  if (n < 1) throw OracleError("P^n needs n >= 1");
  for (int k : {a, b, c})
    if (k < 0 || k > n) throw OracleError("hyperplane exponent " + std::to_string(k) + " outside [0, n]");
  if (d < 0) throw OracleError("degree must be >= 0");
  const int s = a + b + c;
  if ((d == 0 && s == n) || (d == 1 && s == 2 * n + 1)) return 1;
  return 0;
}

std::pair<ExactRational, InvariantQuery> Oracle::reduce_divisor(const InvariantQuery& q) {
  if (q.genus != 0) throw OracleError("divisor reduction is implemented for genus 0 only");
  if (q.A.is_zero()) throw OracleError("divisor axiom does not apply to the zero class");
  ExactRational scalar = 1;
  InvariantQuery rest = q;
  rest.insertions.clear();
  for (std::size_t i = 0; i < q.insertions.size(); ++i) {
    const auto& ins = q.insertions[i];
    std::optional<DivisorClass> d;
    if (ins.real_degree() == 2) d = as_divisor(ins, q.manifold);
    if (!d) {
      rest.insertions.push_back(ins);
      continue;
    }
    scalar *= pairing(q.manifold, *d, q.A);
    if (scalar.is_zero()) {
      rest.insertions.insert(rest.insertions.end(), q.insertions.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             q.insertions.end());
      break;
    }
  }
  return {scalar, rest};
}

namespace {

bool multiple_of_exceptional(const InvariantQuery& q) {
  return q.manifold.kind() == ManifoldKind::blowup_point && q.A[0] == 0 && q.A[1] >= 1;
}

// Exponent of H (and a scalar) represented by an insertion on P^n.
std::optional<std::pair<int, std::int64_t>> hyperplane_exponent(const Insertion& ins, const Manifold& m) {
  switch (ins.kind()) {
    case InsertionKind::unit:
      return std::pair{0, std::int64_t{1}};
    case InsertionKind::hyperplane_power:
      if (ins.power() > m.n()) return std::nullopt;
      return std::pair{ins.power(), std::int64_t{1}};
    case InsertionKind::point:
      if (ins.real_degree() != m.real_dim()) return std::nullopt;
      return std::pair{m.n(), std::int64_t{1}};
    case InsertionKind::divisor:
      return std::pair{1, ins.divisor_class()[0]};
    default:
      return std::nullopt;
  }
}

}  // namespace

EvalResult Oracle::evaluate(const InvariantQuery& q) {
  const Manifold& m = q.manifold;
  if (q.genus < 0) throw OracleError("genus must be >= 0");
  if (m.has_lattice() && q.A.rank() != m.curve_basis().size())
    throw OracleError("curve class rank does not match " + m.key());

  // Curves in a multiple of e stay inside E and miss every pulled-back cycle.
  if (multiple_of_exceptional(q)) {
    for (const auto& ins : q.insertions)
      if (ins.kind() == InsertionKind::pullback) return Zero{"Lemma 1.1"};
  }

  if (!m.has_lattice()) return Symbolic{1, q};
  const auto required =
      index::required_degree_sum(m.n(), c1_eval(m, q.A), q.genus, static_cast<int>(q.insertions.size()));
  if (q.total_degree() != required) return Zero{"dimension"};
  if (q.genus != 0) return Symbolic{1, q};

  if (m.kind() == ManifoldKind::proj_space && q.insertions.size() == 3) {
    int exps[3];
    ExactRational scalar = 1;
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      auto e = hyperplane_exponent(q.insertions[i], m);
      if (!e) {
        ok = false;
        break;
      }
      exps[i] = e->first;
      scalar *= e->second;
    }
    if (ok) {
      if (q.A[0] < 0) return Zero{"not effective"};
      const auto d = static_cast<int>(q.A[0]);
      return Exact{scalar * pn_three_point(m.n(), exps[0], exps[1], exps[2], d)};
    }
  }

  if (q.A.is_zero()) return Symbolic{1, q};
  for (const auto& ins : q.insertions)
    if (ins.kind() == InsertionKind::unit) return Zero{"fundamental class"};

  auto [scalar, rest] = reduce_divisor(q);
  if (scalar.is_zero()) return Zero{"divisor axiom"};

  const bool all_points = std::all_of(rest.insertions.begin(), rest.insertions.end(),
                                      [&](const Insertion& ins) { return is_point_like(ins, m); });
  if (!all_points) return Symbolic{scalar, rest};

  if (m.kind() == ManifoldKind::proj_space) {
    const auto d = rest.A[0];
    if (d < 0) return Zero{"not effective"};
    // A unique line passes through two points of P^n.
    if (d == 1 && rest.insertions.size() == 2) return Exact{scalar};
    if (m.n() == 2) return Exact{scalar * kontsevich_p2(static_cast<int>(d))};
  }
  if (m.kind() == ManifoldKind::blowup_point && m.n() == 2) {
    const auto a = rest.A[0];
    const auto b = rest.A[1];
    const bool effective = (a == 0 && b > 0) || mori_decompose(m, rest.A).has_value();
    if (!effective) return Zero{"not effective"};
    return Exact{scalar * wdvv_f1(a, b)};
  }
  return Symbolic{scalar, rest};
}

}  // namespace gwb
