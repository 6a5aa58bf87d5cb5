#include "gwb/lattice.hpp"

#include "gwb/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace gwb {

DivisorExpr::DivisorExpr(std::initializer_list<std::pair<const std::string, std::int64_t>> terms) {
  for (const auto& [name, coeff] : terms) terms_[name] += coeff;
  normalize();
}

DivisorExpr DivisorExpr::symbol(std::string name, std::int64_t coeff) {
  DivisorExpr e;
  e.terms_[std::move(name)] = coeff;
  e.normalize();
  return e;
}

std::int64_t DivisorExpr::coefficient(std::string_view symbol) const {
  auto it = terms_.find(symbol);
  return it == terms_.end() ? 0 : it->second;
}

DivisorExpr& DivisorExpr::operator+=(const DivisorExpr& rhs) {
  for (const auto& [name, coeff] : rhs.terms_) terms_[name] += coeff;
  normalize();
  return *this;
}

DivisorExpr& DivisorExpr::operator*=(std::int64_t k) {
  for (auto& [name, coeff] : terms_) coeff *= k;
  normalize();
  return *this;
}

DivisorExpr DivisorExpr::substitute(std::string_view symbol, const DivisorExpr& replacement) const {
  DivisorExpr out;
  for (const auto& [name, coeff] : terms_) {
    if (name == symbol)
      out += coeff * replacement;
    else
      out += DivisorExpr::symbol(name, coeff);
  }
  return out;
}

std::string DivisorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [name, coeff] : terms_) {
    if (coeff < 0)
      out += out.empty() ? "-" : " - ";
    else if (!out.empty())
      out += " + ";
    const auto mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag) + " ";
    out += name;
  }
  return out;
}

void DivisorExpr::normalize() { std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; }); }

std::string_view to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::proj_space:
      return "ProjSpace";
    case ManifoldKind::blowup_point:
      return "BlowupPoint";
    case ManifoldKind::proj_bundle:
      return "ProjBundle";
    case ManifoldKind::blowup_along:
      return "BlowupAlong";
  }
  return "?";
}

bool operator==(const ManifoldSpec& a, const ManifoldSpec& b) {
  if (a.kind != b.kind || a.n != b.n) return false;
  switch (a.kind) {
    case ManifoldKind::proj_space:
    case ManifoldKind::blowup_point:
      return true;
    case ManifoldKind::proj_bundle:
      return a.base_name == b.base_name && a.rank == b.rank && a.c1_base == b.c1_base && a.c1_bundle == b.c1_bundle;
    case ManifoldKind::blowup_along:
      return a.locus_name == b.locus_name && a.locus_dim == b.locus_dim && a.base && b.base && *a.base == *b.base;
  }
  return false;
}

const DivisorClass& Manifold::c1() const {
  if (!has_lattice()) throw LatticeError(key() + " carries only a formal first Chern class");
  return c1_;
}

CurveClass Manifold::curve(std::string_view name) const {
  if (kind() == ManifoldKind::blowup_point && name == "L") return CurveClass{1, -1};
  for (std::size_t i = 0; i < curve_basis_.size(); ++i) {
    if (curve_basis_[i] == name) {
      std::vector<std::int64_t> v(curve_basis_.size(), 0);
      v[i] = 1;
      return CurveClass(std::move(v));
    }
  }
  throw LatticeError("no curve class named '" + std::string(name) + "' on " + key());
}

DivisorClass Manifold::divisor(std::string_view name) const {
  for (std::size_t i = 0; i < divisor_basis_.size(); ++i) {
    if (divisor_basis_[i] == name) {
      std::vector<std::int64_t> v(divisor_basis_.size(), 0);
      v[i] = 1;
      return DivisorClass(std::move(v));
    }
  }
  throw LatticeError("no divisor class named '" + std::string(name) + "' on " + key());
}

std::string Manifold::key() const {
  switch (kind()) {
    case ManifoldKind::proj_space:
      return "P" + std::to_string(n());
    case ManifoldKind::blowup_point:
      return "BlP" + std::to_string(n());
    case ManifoldKind::proj_bundle:
      return "P(V)/" + spec_.base_name + "/r" + std::to_string(spec_.rank);
    case ManifoldKind::blowup_along:
      return "Bl_" + spec_.locus_name + "(" + make_manifold(*spec_.base).key() + ")";
  }
  return "?";
}

Manifold make_manifold(const ManifoldSpec& spec) {
  Manifold m;
  m.spec_ = spec;
  const auto n = static_cast<std::int64_t>(spec.n);
  switch (spec.kind) {
    case ManifoldKind::proj_space:
      if (spec.n < 2) throw LatticeError("P^n requires n >= 2, got n = " + std::to_string(spec.n));
      m.curve_basis_ = {"l"};
      m.divisor_basis_ = {"H"};
      m.pairing_ = {{1}};
      m.c1_ = DivisorClass{n + 1};
      m.c1_formal_ = DivisorExpr::symbol("H", n + 1);
      break;
    case ManifoldKind::blowup_point:
      if (spec.n < 2) throw LatticeError("point blow-up requires n >= 2, got n = " + std::to_string(spec.n));
      m.curve_basis_ = {"f", "e"};
      m.divisor_basis_ = {"h", "E"};
      m.pairing_ = {{1, 0}, {0, -1}};
      m.c1_ = DivisorClass{n + 1, -(n - 1)};
      m.c1_formal_ = DivisorExpr{{"h", n + 1}, {"E", -(n - 1)}};
      break;
    case ManifoldKind::proj_bundle:
      if (spec.rank < 1) throw LatticeError("projectivized bundle requires rank >= 1");
      if (spec.n < spec.rank - 1) throw LatticeError("projectivized bundle dimension below fibre dimension");
      m.c1_formal_ = proj_bundle_c1(spec.c1_base, spec.c1_bundle, spec.rank);
      break;
    case ManifoldKind::blowup_along: {
      if (!spec.base) throw LatticeError("blow-up along a submanifold needs a base manifold");
      const Manifold base = make_manifold(*spec.base);
      if (!base.has_lattice()) throw LatticeError("blow-up base " + base.key() + " has no lattice");
      if (spec.n != base.n()) throw LatticeError("blow-up dimension differs from base dimension");
      if (spec.locus_dim < 0 || spec.locus_dim > spec.n - 2)
        throw LatticeError("blow-up centre must have complex codimension >= 2");
      for (const auto& name : base.curve_basis_) m.curve_basis_.push_back("p!(" + name + ")");
      for (const auto& name : base.divisor_basis_) m.divisor_basis_.push_back("p*" + name);
      m.pairing_ = base.pairing_;
      // E.p!(A) = 0
      m.c1_ = base.c1_;
      for (std::size_t i = 0; i < base.divisor_basis_.size(); ++i)
        m.c1_formal_ += DivisorExpr::symbol(m.divisor_basis_[i], base.c1_[i]);
      m.c1_formal_ += DivisorExpr::symbol("E", -(n - spec.locus_dim - 1));
      break;
    }
  }
  return m;
}

Manifold proj_space(int n) {
  ManifoldSpec spec;
  spec.n = n;
  return make_manifold(spec);
}

Manifold blowup_point(int n) {
  ManifoldSpec spec;
  spec.kind = ManifoldKind::blowup_point;
  spec.n = n;
  return make_manifold(spec);
}

Manifold proj_bundle(std::string base_name, int n, int rank, DivisorExpr c1_base, DivisorExpr c1_bundle) {
  ManifoldSpec spec;
  spec.kind = ManifoldKind::proj_bundle;
  spec.n = n;
  spec.base_name = std::move(base_name);
  spec.rank = rank;
  spec.c1_base = std::move(c1_base);
  spec.c1_bundle = std::move(c1_bundle);
  return make_manifold(spec);
}

Manifold blowup_along(const Manifold& base, std::string locus_name, int locus_dim) {
  ManifoldSpec spec;
  spec.kind = ManifoldKind::blowup_along;
  spec.n = base.n();
  spec.base = std::make_shared<const ManifoldSpec>(base.spec());
  spec.locus_name = std::move(locus_name);
  spec.locus_dim = locus_dim;
  return make_manifold(spec);
}

std::int64_t pairing(const Manifold& m, const DivisorClass& d, const CurveClass& a) {
  if (!m.has_lattice()) throw LatticeError(m.key() + " has no intersection lattice");
  if (d.rank() != m.divisor_basis().size())
    throw LatticeError("divisor class has rank " + std::to_string(d.rank()) + ", " + m.key() + " expects " +
                       std::to_string(m.divisor_basis().size()));
  if (a.rank() != m.curve_basis().size())
    throw LatticeError("curve class has rank " + std::to_string(a.rank()) + ", " + m.key() + " expects " +
                       std::to_string(m.curve_basis().size()));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) total += d[i] * m.pairing_entry(i, j) * a[j];
  return total;
}

std::int64_t c1_eval(const Manifold& m, const CurveClass& a) { return pairing(m, m.c1(), a); }

DivisorExpr proj_bundle_c1(const DivisorExpr& c1_base, const DivisorExpr& c1_bundle, int rank,
                           const std::string& xi_symbol) {
  if (rank < 1) throw LatticeError("bundle rank must be >= 1");
  return c1_base + c1_bundle + DivisorExpr::symbol(xi_symbol, -static_cast<std::int64_t>(rank));
}

std::int64_t evaluate_formal(const DivisorExpr& expr, const std::map<std::string, DivisorClass, std::less<>>& identification,
                             const Manifold& m, const CurveClass& a) {
  std::int64_t total = 0;
  for (const auto& [name, coeff] : expr.terms()) {
    auto it = identification.find(name);
    if (it == identification.end()) throw LatticeError("symbol '" + name + "' has no identification on " + m.key());
    total += coeff * pairing(m, it->second, a);
  }
  return total;
}

std::map<std::string, DivisorClass, std::less<>> bundle_blowup_identification(const Manifold& blowup,
                                                                              const std::string& base_hyperplane,
                                                                              const std::string& xi_symbol) {
  if (blowup.kind() != ManifoldKind::blowup_point) throw LatticeError("identification needs a point blow-up");
  const auto h = blowup.divisor("h");
  const auto exc = blowup.divisor("E");
  return {{base_hyperplane, h - exc}, {xi_symbol, -h}};
}

namespace {

// Solves pairing_matrix * x = rhs over Q and insists on an integral answer.
std::vector<std::int64_t> solve_integral(const Manifold& m, const std::vector<std::int64_t>& rhs) {
  const std::size_t rows = m.divisor_basis().size();
  const std::size_t cols = m.curve_basis().size();
  if (rows != cols) throw LatticeError("pairing on " + m.key() + " is not square");
  std::vector<std::vector<ExactRational>> aug(rows, std::vector<ExactRational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m.pairing_entry(i, j);
    aug[i][cols] = rhs[i];
  }
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = col;
    while (pivot < rows && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) throw LatticeError("pairing on " + m.key() + " is degenerate");
    std::swap(aug[col], aug[pivot]);
    const ExactRational p = aug[col][col];
    for (auto& v : aug[col]) v /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      const ExactRational factor = aug[r][col];
      for (std::size_t c = col; c <= cols; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }
  std::vector<std::int64_t> x(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    if (!aug[i][cols].is_integer()) throw LatticeError("Poincare dual is not integral on " + m.key());
    x[i] = static_cast<std::int64_t>(aug[i][cols].numerator());
  }
  return x;
}

}  // namespace

CurveClass p_shriek(const Manifold& m, const Manifold& mtilde, const CurveClass& a) {
  if (m.kind() == ManifoldKind::proj_space && mtilde.kind() == ManifoldKind::blowup_point && m.n() == mtilde.n()) {
    // Projection formula: p^*H . p!(A) = H . A, and E . p!(A) = 0.
    return CurveClass(solve_integral(mtilde, {pairing(m, m.divisor("H"), a), 0}));
  }
  if (mtilde.kind() == ManifoldKind::blowup_along && mtilde.spec().base && *mtilde.spec().base == m.spec()) {
    if (a.rank() != m.curve_basis().size()) throw LatticeError("curve class rank does not match " + m.key());
    return CurveClass(std::vector<std::int64_t>(a.coeffs().begin(), a.coeffs().end()));
  }
  throw LatticeError("p! is not implemented from " + m.key() + " to " + mtilde.key());
}

std::optional<MoriDecomposition> mori_decompose(const Manifold& mtilde, const CurveClass& a) {
  if (mtilde.kind() != ManifoldKind::blowup_point) throw LatticeError("Mori decomposition needs a point blow-up");
  if (a.rank() != 2) throw LatticeError("curve class rank does not match " + mtilde.key());
  // a (L - e) + b e = a f + (b - 2a) e
  const MoriDecomposition d{a[0], a[1] + 2 * a[0]};
  if (d.a < 0 || d.b < 0) return std::nullopt;
  return d;
}

CurveClass recompose(const Manifold& mtilde, const MoriDecomposition& d) {
  const auto l = mtilde.curve("L");
  const auto e = mtilde.curve("e");
  return d.a * (l - e) + d.b * e;
}

nlohmann::json to_json(const DivisorExpr& expr) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, coeff] : expr.terms()) j[name] = coeff;
  return j;
}

namespace {

DivisorExpr expr_from_json(const nlohmann::json& j) {
  DivisorExpr e;
  for (const auto& [name, coeff] : j.items()) e += DivisorExpr::symbol(name, coeff.get<std::int64_t>());
  return e;
}

ManifoldKind kind_from_string(const std::string& s) {
  for (auto k : {ManifoldKind::proj_space, ManifoldKind::blowup_point, ManifoldKind::proj_bundle,
                 ManifoldKind::blowup_along})
    if (to_string(k) == s) return k;
  throw LatticeError("unknown manifold kind '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const ManifoldSpec& spec) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["n"] = spec.n;
  if (spec.kind == ManifoldKind::proj_bundle) {
    j["base"] = spec.base_name;
    j["rank"] = spec.rank;
    j["c1_base"] = to_json(spec.c1_base);
    j["c1_bundle"] = to_json(spec.c1_bundle);
  } else if (spec.kind == ManifoldKind::blowup_along) {
    j["base"] = to_json(*spec.base);
    j["locus"] = spec.locus_name;
    j["locus_dim"] = spec.locus_dim;
  }
  return j;
}

ManifoldSpec spec_from_json(const nlohmann::json& j) {
  try {
    ManifoldSpec spec;
    spec.kind = kind_from_string(j.at("kind").get<std::string>());
    spec.n = j.at("n").get<int>();
    if (spec.kind == ManifoldKind::proj_bundle) {
      spec.base_name = j.at("base").get<std::string>();
      spec.rank = j.at("rank").get<int>();
      spec.c1_base = expr_from_json(j.at("c1_base"));
      spec.c1_bundle = expr_from_json(j.at("c1_bundle"));
    } else if (spec.kind == ManifoldKind::blowup_along) {
      spec.base = std::make_shared<const ManifoldSpec>(spec_from_json(j.at("base")));
      spec.locus_name = j.at("locus").get<std::string>();
      spec.locus_dim = j.at("locus_dim").get<int>();
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw LatticeError(std::string("malformed manifold descriptor: ") + e.what());
  }
}

nlohmann::json to_json(const CurveClass& a) {
  return nlohmann::json(std::vector<std::int64_t>(a.coeffs().begin(), a.coeffs().end()));
}

CurveClass curve_from_json(const Manifold& m, const nlohmann::json& j) {
  if (!j.is_array()) throw LatticeError("curve class must be an integer array");
  auto coeffs = j.get<std::vector<std::int64_t>>();
  if (coeffs.size() != m.curve_basis().size()) throw LatticeError("curve class rank does not match " + m.key());
  return CurveClass(std::move(coeffs));
}

std::string format_curve(const Manifold& m, const CurveClass& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const auto c = a[i];
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += m.curve_basis().at(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace gwb
