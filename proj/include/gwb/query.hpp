#pragma once

#include "gwb/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gwb {

enum class InsertionKind { unit, divisor, hyperplane_power, point, pullback, exc_dual };

// One cohomology slot of an invariant. Degrees are real and even.
class Insertion {
 public:
  static Insertion unit();
  // Degree-2 class given in the divisor basis of the manifold it lives on.
  static Insertion divisor(DivisorClass d);
  // H^k on P^n (degree 2k).
  static Insertion hyperplane_power(int k);
  // Point class of a manifold of complex dimension n (degree 2n).
  static Insertion point(int n);
  // p^* of a class living on the base of a blow-up; keeps the base degree.
  static Insertion pullback(const Insertion& base);
  // PD(E) on a point blow-up.
  static Insertion exc_dual();

  InsertionKind kind() const { return kind_; }
  int real_degree() const { return degree_; }
  const DivisorClass& divisor_class() const { return divisor_; }
  int power() const { return power_; }
  const Insertion& base() const;

  // Support condition used by the surface blow-up rule.
  bool supported_away_from_locus() const { return away_; }
  Insertion with_support_away(bool away = true) const;

  // "pt", "H^2", "p*pt", "PD(E)", "D[1,0]", "1"; a trailing "@away" marks
  // the support flag.
  std::string to_string() const;

  friend bool operator==(const Insertion& a, const Insertion& b);

 private:
  InsertionKind kind_ = InsertionKind::unit;
  int degree_ = 0;
  int power_ = 0;
  DivisorClass divisor_;
  std::shared_ptr<const Insertion> base_;
  bool away_ = false;
};

// Psi^M_{(A,g)}(alpha_1, ..., alpha_m).
struct InvariantQuery {
  Manifold manifold;
  CurveClass A;
  int genus = 0;
  std::vector<Insertion> insertions;

  int total_degree() const;
  int count(InsertionKind kind) const;
  std::string to_string() const;
};

// Divisor class on `m` represented by a degree-2 insertion, if any:
// divisor, H^1, PD(E), and pullbacks of base divisors (p^*H = h, the first
// divisor basis element of the blow-up).
std::optional<DivisorClass> as_divisor(const Insertion& ins, const Manifold& m);

// True for pt and p^*pt.
bool is_point_like(const Insertion& ins, const Manifold& m);

}  // namespace gwb
