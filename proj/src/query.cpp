#include "gwb/query.hpp"

#include <stdexcept>

namespace gwb {

Insertion Insertion::unit() { return Insertion{}; }

Insertion Insertion::divisor(DivisorClass d) {
  Insertion ins;
  ins.kind_ = InsertionKind::divisor;
  ins.degree_ = 2;
  ins.divisor_ = std::move(d);
  return ins;
}

Insertion Insertion::hyperplane_power(int k) {
  if (k < 0) throw std::invalid_argument("hyperplane power must be >= 0");
  if (k == 0) return unit();
  Insertion ins;
  ins.kind_ = InsertionKind::hyperplane_power;
  ins.degree_ = 2 * k;
  ins.power_ = k;
  return ins;
}

Insertion Insertion::point(int n) {
  if (n < 1) throw std::invalid_argument("point class needs n >= 1");
  Insertion ins;
  ins.kind_ = InsertionKind::point;
  ins.degree_ = 2 * n;
  ins.power_ = n;
  return ins;
}

Insertion Insertion::pullback(const Insertion& base) {
  if (base.kind_ == InsertionKind::pullback || base.kind_ == InsertionKind::exc_dual)
    throw std::invalid_argument("cannot pull back " + base.to_string());
  Insertion ins;
  ins.kind_ = InsertionKind::pullback;
  ins.degree_ = base.degree_;
  ins.base_ = std::make_shared<const Insertion>(base);
  ins.away_ = base.away_;
  return ins;
}

Insertion Insertion::exc_dual() {
  Insertion ins;
  ins.kind_ = InsertionKind::exc_dual;
  ins.degree_ = 2;
  return ins;
}

const Insertion& Insertion::base() const {
  if (!base_) throw std::logic_error("insertion " + to_string() + " is not a pullback");
  return *base_;
}

Insertion Insertion::with_support_away(bool away) const {
  Insertion copy = *this;
  copy.away_ = away;
  return copy;
}

std::string Insertion::to_string() const {
  std::string s;
  switch (kind_) {
    case InsertionKind::unit:
      s = "1";
      break;
    case InsertionKind::divisor: {
      s = "D[";
      for (std::size_t i = 0; i < divisor_.rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(divisor_[i]);
      }
      s += "]";
      break;
    }
    case InsertionKind::hyperplane_power:
      s = power_ == 1 ? "H" : "H^" + std::to_string(power_);
      break;
    case InsertionKind::point:
      s = "pt";
      break;
    case InsertionKind::pullback:
      s = "p*" + base_->with_support_away(false).to_string();
      break;
    case InsertionKind::exc_dual:
      s = "PD(E)";
      break;
  }
  if (away_) s += "@away";
  return s;
}

bool operator==(const Insertion& a, const Insertion& b) {
  if (a.kind_ != b.kind_ || a.degree_ != b.degree_ || a.power_ != b.power_ || a.away_ != b.away_) return false;
  if (a.kind_ == InsertionKind::divisor && a.divisor_ != b.divisor_) return false;
  if (a.kind_ == InsertionKind::pullback && !(*a.base_ == *b.base_)) return false;
  return true;
}

int InvariantQuery::total_degree() const {
  int total = 0;
  for (const auto& ins : insertions) total += ins.real_degree();
  return total;
}

int InvariantQuery::count(InsertionKind kind) const {
  int c = 0;
  for (const auto& ins : insertions)
    if (ins.kind() == kind) ++c;
  return c;
}

std::string InvariantQuery::to_string() const {
  std::string s = "Psi^" + manifold.key() + "_(" + format_curve(manifold, A) + ",g=" + std::to_string(genus) + ")(";
  for (std::size_t i = 0; i < insertions.size(); ++i) {
    if (i) s += ",";
    s += insertions[i].to_string();
  }
  return s + ")";
}

std::optional<DivisorClass> as_divisor(const Insertion& ins, const Manifold& m) {
  if (!m.has_lattice()) return std::nullopt;
  const auto rank = m.divisor_basis().size();
  switch (ins.kind()) {
    case InsertionKind::divisor:
      if (ins.divisor_class().rank() != rank) throw LatticeError("divisor insertion rank does not match " + m.key());
      return ins.divisor_class();
    case InsertionKind::hyperplane_power:
      if (ins.power() == 1 && m.kind() == ManifoldKind::proj_space) return m.divisor("H");
      return std::nullopt;
    case InsertionKind::exc_dual:
      if (m.kind() == ManifoldKind::blowup_point) return m.divisor("E");
      return std::nullopt;
    case InsertionKind::pullback: {
      if (m.kind() != ManifoldKind::blowup_point && m.kind() != ManifoldKind::blowup_along) return std::nullopt;
      const Insertion& base = ins.base();
      std::vector<std::int64_t> coeffs(rank, 0);
      if (base.kind() == InsertionKind::hyperplane_power && base.power() == 1) {
        coeffs[0] = 1;
      } else if (base.kind() == InsertionKind::divisor) {
        if (base.divisor_class().rank() > rank) throw LatticeError("pulled-back divisor does not fit " + m.key());
        for (std::size_t i = 0; i < base.divisor_class().rank(); ++i) coeffs[i] = base.divisor_class()[i];
      } else {
        return std::nullopt;
      }
      return DivisorClass(std::move(coeffs));
    }
    case InsertionKind::unit:
    case InsertionKind::point:
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_point_like(const Insertion& ins, const Manifold& m) {
  if (ins.real_degree() != m.real_dim()) return false;
  switch (ins.kind()) {
    case InsertionKind::point:
      return true;
    case InsertionKind::hyperplane_power:
      return m.kind() == ManifoldKind::proj_space && ins.power() == m.n();
    case InsertionKind::pullback:
      return ins.base().kind() == InsertionKind::point ||
             (ins.base().kind() == InsertionKind::hyperplane_power && ins.base().power() == m.n());
    default:
      return false;
  }
}

}  // namespace gwb
