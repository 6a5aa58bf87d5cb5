#pragma once

// Intersection lattices of the manifolds that appear on either side of a
// blow-up: P^n, its one-point blow-up, projectivized bundles (formal c1
// only) and blow-ups along submanifolds (pulled-back sublattice only).

#include <nlohmann/json_fwd.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gwb {

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}
  LatticeVector(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {}

  static LatticeVector zero(std::size_t rank) { return LatticeVector(std::vector<std::int64_t>(rank, 0)); }

  std::size_t rank() const { return coeffs_.size(); }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& rhs) {
    check_rank(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& rhs) {
    check_rank(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  LatticeVector& operator*=(std::int64_t k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }
  friend LatticeVector operator*(std::int64_t k, LatticeVector a) { return a *= k; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  void check_rank(const LatticeVector& rhs) const {
    if (rhs.rank() != rank()) throw LatticeError("lattice vectors of different rank");
  }

  std::vector<std::int64_t> coeffs_;
};

struct CurveTag {};
struct DivisorTag {};
using CurveClass = LatticeVector<CurveTag>;
using DivisorClass = LatticeVector<DivisorTag>;

// Z-linear combination of named divisor symbols, e.g. "c1M - (n-2) xi1 - 2 xi".
// Pullbacks along bundle projections are implicit: a symbol keeps its name
// on the total space.
class DivisorExpr {
 public:
  DivisorExpr() = default;
  DivisorExpr(std::initializer_list<std::pair<const std::string, std::int64_t>> terms);

  static DivisorExpr symbol(std::string name, std::int64_t coeff = 1);

  std::int64_t coefficient(std::string_view symbol) const;
  const std::map<std::string, std::int64_t, std::less<>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  DivisorExpr& operator+=(const DivisorExpr& rhs);
  DivisorExpr& operator*=(std::int64_t k);
  friend DivisorExpr operator+(DivisorExpr a, const DivisorExpr& b) { return a += b; }
  friend DivisorExpr operator-(DivisorExpr a, const DivisorExpr& b) { return a += (-1) * b; }
  friend DivisorExpr operator*(std::int64_t k, DivisorExpr a) { return a *= k; }

  // Replace every occurrence of `symbol` by `replacement`.
  DivisorExpr substitute(std::string_view symbol, const DivisorExpr& replacement) const;

  std::string to_string() const;

  friend bool operator==(const DivisorExpr&, const DivisorExpr&) = default;

 private:
  void normalize();

  std::map<std::string, std::int64_t, std::less<>> terms_;
};

enum class ManifoldKind { proj_space, blowup_point, proj_bundle, blowup_along };

std::string_view to_string(ManifoldKind kind);

// Serializable manifold descriptor: {kind, n, extra params}.
struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::proj_space;
  int n = 2;  // complex dimension

  // proj_bundle: P(V) over `base`, V of rank `rank`.
  std::string base_name;
  int rank = 1;
  DivisorExpr c1_base;
  DivisorExpr c1_bundle;

  // blowup_along: base manifold and the complex dimension of the centre.
  std::shared_ptr<const ManifoldSpec> base;
  std::string locus_name;
  int locus_dim = 0;

  friend bool operator==(const ManifoldSpec& a, const ManifoldSpec& b);
};

class Manifold {
 public:
  const ManifoldSpec& spec() const { return spec_; }
  ManifoldKind kind() const { return spec_.kind; }
  int n() const { return spec_.n; }
  int real_dim() const { return 2 * spec_.n; }

  const std::vector<std::string>& curve_basis() const { return curve_basis_; }
  const std::vector<std::string>& divisor_basis() const { return divisor_basis_; }
  bool has_lattice() const { return !curve_basis_.empty(); }

  // Divisor x curve intersection table.
  std::int64_t pairing_entry(std::size_t divisor, std::size_t curve) const { return pairing_.at(divisor).at(curve); }
  const DivisorClass& c1() const;
  // First Chern class as a formal expression; always available.
  const DivisorExpr& c1_formal() const { return c1_formal_; }

  // Named classes: "l"/"H" on P^n; "f","e","L" / "h","E" on the point blow-up.
  CurveClass curve(std::string_view name) const;
  DivisorClass divisor(std::string_view name) const;
  CurveClass zero_curve() const { return CurveClass::zero(curve_basis_.size()); }

  // Stable identifier used in cache keys and reports: "P3", "BlP2", ...
  std::string key() const;

  friend bool operator==(const Manifold& a, const Manifold& b) { return a.spec_ == b.spec_; }

 private:
  friend Manifold make_manifold(const ManifoldSpec& spec);

  ManifoldSpec spec_;
  std::vector<std::string> curve_basis_;
  std::vector<std::string> divisor_basis_;
  std::vector<std::vector<std::int64_t>> pairing_;
  DivisorClass c1_;
  DivisorExpr c1_formal_;
};

Manifold make_manifold(const ManifoldSpec& spec);
Manifold proj_space(int n);
Manifold blowup_point(int n);
Manifold proj_bundle(std::string base_name, int n, int rank, DivisorExpr c1_base, DivisorExpr c1_bundle);
Manifold blowup_along(const Manifold& base, std::string locus_name, int locus_dim);

std::int64_t pairing(const Manifold& m, const DivisorClass& d, const CurveClass& a);
std::int64_t c1_eval(const Manifold& m, const CurveClass& a);

// c1(P(V)) = c1(X) + c1(V) - r xi_V with xi_V the tautological class.
DivisorExpr proj_bundle_c1(const DivisorExpr& c1_base, const DivisorExpr& c1_bundle, int rank,
                           const std::string& xi_symbol = "xi");

// Pairs a formal expression with a curve class after mapping each symbol to
// a concrete divisor. Unmapped symbols are an error.
std::int64_t evaluate_formal(const DivisorExpr& expr, const std::map<std::string, DivisorClass, std::less<>>& identification,
                             const Manifold& m, const CurveClass& a);

// P(O(-1) + O) over P^{n-1} is the blow-up of P^n at a point: the pulled
// back hyperplane of the base is h - E and the tautological class is -h.
std::map<std::string, DivisorClass, std::less<>> bundle_blowup_identification(const Manifold& blowup,
                                                                              const std::string& base_hyperplane = "H'",
                                                                              const std::string& xi_symbol = "xi");

// PD p^* PD(A). Concrete for P^n -> Bl_pt P^n and for blowup_along.
CurveClass p_shriek(const Manifold& m, const Manifold& mtilde, const CurveClass& a);

// A = a (L - e) + b e with a, b >= 0, where L = f - e.
struct MoriDecomposition {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const MoriDecomposition&, const MoriDecomposition&) = default;
};

std::optional<MoriDecomposition> mori_decompose(const Manifold& mtilde, const CurveClass& a);
CurveClass recompose(const Manifold& mtilde, const MoriDecomposition& decomposition);

// JSON: {"kind": "BlowupPoint", "n": 2, ...}; classes are integer arrays.
nlohmann::json to_json(const ManifoldSpec& spec);
ManifoldSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CurveClass& a);
nlohmann::json to_json(const DivisorExpr& expr);
CurveClass curve_from_json(const Manifold& m, const nlohmann::json& j);

// "3f-e" style rendering in the manifold's curve basis.
std::string format_curve(const Manifold& m, const CurveClass& a);

}  // namespace gwb
