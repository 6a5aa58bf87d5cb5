#include "gwb/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gwb::parse {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Manifold manifold(std::string_view text) {
  try {
    if (text.starts_with("BlP")) return blowup_point(parse_int(text.substr(3), "manifold dimension"));
    if (text.starts_with("P")) return proj_space(parse_int(text.substr(1), "manifold dimension"));
  } catch (const LatticeError& e) {
    throw ParseError("manifold '" + std::string(text) + "': " + e.what());
  } catch (const ParseError&) {
  }
  throw ParseError("unknown manifold '" + std::string(text) + "' (expected P<n> or BlP<n>)");
}

CurveClass curve(const Manifold& m, std::string_view text) {
  if (text.empty()) throw ParseError("empty curve class");
  std::vector<std::int64_t> coeffs(m.curve_basis().size(), 0);
  if (text == "0") return CurveClass(std::move(coeffs));
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t term_start = pos;
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (term_start != 0) {
      throw ParseError("unexpected token '" + std::string(text.substr(pos)) + "' in class '" + std::string(text) + "'");
    }
    std::int64_t coeff = 1;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > digits) coeff = parse_int(text.substr(digits, pos - digits), "coefficient");
    const std::size_t name_start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    const auto name = text.substr(name_start, pos - name_start);
    const auto& basis = m.curve_basis();
    auto it = std::find(basis.begin(), basis.end(), name);
    if (name.empty() || it == basis.end()) {
      const auto bad = text.substr(term_start, std::max<std::size_t>(pos - term_start, 1));
      std::string letters;
      for (const auto& b : basis) letters += (letters.empty() ? "" : ", ") + b;
      throw ParseError("unexpected token '" + std::string(bad) + "' in class '" + std::string(text) +
                       "' (basis of " + m.key() + ": " + letters + ")");
    }
    coeffs[static_cast<std::size_t>(it - basis.begin())] += sign * coeff;
  }
  return CurveClass(std::move(coeffs));
}

Insertion insertion(const Manifold& m, std::string_view text) {
  bool away = false;
  if (text.ends_with("@away")) {
    away = true;
    text.remove_suffix(5);
  }
  auto finish = [&](Insertion ins) { return away ? ins.with_support_away() : ins; };

  if (text.starts_with("p*")) {
    if (m.kind() != ManifoldKind::blowup_point)
      throw ParseError("pullback '" + std::string(text) + "' needs a blow-up manifold, got " + m.key());
    const Insertion base = insertion(proj_space(m.n()), text.substr(2));
    return finish(Insertion::pullback(base));
  }
  if (text == "1") return finish(Insertion::unit());
  if (text == "pt") return finish(Insertion::point(m.n()));
  if (text == "PD(E)") {
    if (m.kind() != ManifoldKind::blowup_point) throw ParseError("PD(E) needs a blow-up manifold");
    return finish(Insertion::exc_dual());
  }
  if (m.kind() == ManifoldKind::proj_space) {
    if (text == "H") return finish(Insertion::hyperplane_power(1));
    if (text.starts_with("H^")) {
      const int k = parse_int(text.substr(2), "hyperplane power");
      if (k < 0 || k > m.n()) throw ParseError("hyperplane power " + std::to_string(k) + " outside [0, n]");
      return finish(Insertion::hyperplane_power(k));
    }
  } else if (m.kind() == ManifoldKind::blowup_point) {
    if (text == "h") return finish(Insertion::divisor(m.divisor("h")));
    if (text == "E") return finish(Insertion::divisor(m.divisor("E")));
  }
  throw ParseError("unknown insertion '" + std::string(text) + "' on " + m.key());
}

std::vector<Insertion> insertions(const Manifold& m, std::string_view text) {
  std::vector<Insertion> out;
  if (text.empty()) return out;
  for (auto token : split(text, ',')) {
    if (token.empty()) throw ParseError("empty insertion in list '" + std::string(text) + "'");
    out.push_back(insertion(m, token));
  }
  return out;
}

rules::BlowupLocus locus(std::string_view text, int ambient_n) {
  using rules::BlowupLocus;
  if (text.starts_with("curve:")) {
    int g0 = -1;
    std::int64_t c1 = 0;
    bool have_c1 = false;
    for (auto kv : split(text.substr(6), ',')) {
      if (kv.starts_with("g0=")) {
        g0 = parse_int(kv.substr(3), "g0");
      } else if (kv.starts_with("c1=")) {
        c1 = parse_int(kv.substr(3), "c1");
        have_c1 = true;
      } else {
        throw ParseError("unexpected token '" + std::string(kv) + "' in locus '" + std::string(text) + "'");
      }
    }
    if (g0 < 0 || !have_c1) throw ParseError("curve locus needs g0=<int>,c1=<int>");
    return BlowupLocus::curve(ambient_n, g0, c1);
  }
  if (text == "surface:K3") return BlowupLocus::surface(ambient_n, BlowupLocus::Shape::k3);
  if (text == "surface:torus") return BlowupLocus::surface(ambient_n, BlowupLocus::Shape::torus);
  if (text == "surface:other") return BlowupLocus::surface(ambient_n, BlowupLocus::Shape::other);
  if (text.starts_with("surface:product:")) {
    const auto parts = split(text.substr(16), 'x');
    if (parts.size() != 2) throw ParseError("product surface needs <g1>x<g2>");
    return BlowupLocus::surface(ambient_n, BlowupLocus::Shape::product_positive_genus,
                                parse_int(parts[0], "factor genus"), parse_int(parts[1], "factor genus"));
  }
  throw ParseError("unknown locus '" + std::string(text) + "'");
}

rules::VerifyRange range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), "range start"), parse_int(text.substr(dots + 2), "range end")};
}

}  // namespace gwb::parse
