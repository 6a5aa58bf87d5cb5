#pragma once

// Genus-zero ground truth on P^n and on the one-point blow-up of P^2.
//
// Two recursions are implemented independently of each other:
//   * Kontsevich's recursion for N_d on P^2;
//   * a WDVV recursion on Bl_pt P^2 over the basis {1, h, E, pt}
//     (derivation in docs/wdvv_blowup.md).
// Everything else reduces to these through the divisor axiom and a few
// seeded identities.

#include "gwb/memo.hpp"
#include "gwb/query.hpp"
#include "gwb/rational.hpp"

#include <memory>
#include <string>
#include <utility>
#include <variant>

namespace gwb {

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Exact {
  ExactRational value;
};
struct Zero {
  std::string reason;
};
struct Symbolic {
  ExactRational scalar;  // accumulated divisor-axiom factor
  InvariantQuery query;  // residual query after reduction
};
using EvalResult = std::variant<Exact, Zero, Symbolic>;

// Numeric value of an Exact or Zero result.
std::optional<ExactRational> numeric_value(const EvalResult& r);
std::string describe(const EvalResult& r);

// Cache keys of the two recursions.
inline constexpr std::string_view kKontsevichKey = "P2";
inline constexpr std::string_view kBlowupKey = "BlP2";

class Oracle {
 public:
  Oracle();
  explicit Oracle(std::shared_ptr<MemoTable> memo);

  MemoTable& memo() { return *memo_; }
  const MemoTable& memo() const { return *memo_; }
  std::shared_ptr<MemoTable> memo_ptr() const { return memo_; }

  // Rational plane curves of degree d through 3d-1 general points.
  ExactRational kontsevich_p2(int d);

  // Rational curves in class a f + b e on Bl_pt P^2 through c1 - 1 general
  // points. Requires the class to pass mori_decompose or be a multiple of e.
  ExactRational wdvv_f1(std::int64_t a, std::int64_t b);

  // <H^a, H^b, H^c>_d on P^n.
  static ExactRational pn_three_point(int n, int a, int b, int c, int d);

  // Strips degree-2 divisor insertions. Returns the product of D.A factors
  // and the residual query; stops early once the factor is zero.
  static std::pair<ExactRational, InvariantQuery> reduce_divisor(const InvariantQuery& q);

  EvalResult evaluate(const InvariantQuery& q);

 private:
  std::shared_ptr<MemoTable> memo_;
};

// Support of the blow-up invariants: e, and a f + b e with a >= 1 and
// -a <= b <= 0 (both h and h - E are nef).
bool blowup_class_supported(std::int64_t a, std::int64_t b);

}  // namespace gwb
