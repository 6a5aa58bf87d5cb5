#include <doctest.h>

#include "gwb/lattice.hpp"
#include "gwb/rational.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace gwb;

TEST_CASE("projective plane lattice") {
  const auto p2 = proj_space(2);
  CHECK(p2.curve_basis() == std::vector<std::string>{"l"});
  CHECK(pairing(p2, p2.divisor("H"), p2.curve("l")) == 1);
  CHECK(p2.c1() == DivisorClass{3});
  CHECK(c1_eval(p2, CurveClass{4}) == 12);
  CHECK(p2.key() == "P2");
  CHECK_THROWS_AS(proj_space(1), LatticeError);
}

TEST_CASE("point blow-up pairing table and c1") {
  const auto b = blowup_point(2);
  const auto h = b.divisor("h");
  const auto E = b.divisor("E");
  const auto f = b.curve("f");
  const auto e = b.curve("e");
  CHECK(pairing(b, h, f) == 1);
  CHECK(pairing(b, h, e) == 0);
  CHECK(pairing(b, E, f) == 0);
  CHECK(pairing(b, E, e) == -1);
  CHECK(b.c1() == DivisorClass{3, -1});
  CHECK(blowup_point(5).c1() == DivisorClass{6, -4});
  CHECK(b.curve("L") == f - e);
  CHECK(b.key() == "BlP2");
}

TEST_CASE("pairing values on the blow-up for several n") {
  for (int n = 2; n <= 6; ++n) {
    const auto b = blowup_point(n);
    CHECK(pairing(b, b.divisor("E"), b.curve("e")) == -1);
    CHECK(pairing(b, b.divisor("E"), b.curve("f") - b.curve("e")) == 1);
    CHECK(pairing(b, b.divisor("h"), b.zero_curve()) == 0);
    CHECK(c1_eval(b, b.curve("f")) == n + 1);
    CHECK(c1_eval(b, b.curve("e")) == n - 1);
    for (int d = 1; d <= 5; ++d) CHECK(c1_eval(b, d * b.curve("f") - b.curve("e")) == (n + 1) * d - (n - 1));
    CHECK(c1_eval(b, b.zero_curve()) == 0);
  }
}

TEST_CASE("pairing is bilinear on random vectors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-6, 6);
  const auto b = blowup_point(3);
  for (int trial = 0; trial < 200; ++trial) {
    const DivisorClass d1{coeff(rng), coeff(rng)};
    const DivisorClass d2{coeff(rng), coeff(rng)};
    const CurveClass a1{coeff(rng), coeff(rng)};
    const CurveClass a2{coeff(rng), coeff(rng)};
    CHECK(pairing(b, d1 + d2, a1) == pairing(b, d1, a1) + pairing(b, d2, a1));
    CHECK(pairing(b, d1, a1 + a2) == pairing(b, d1, a1) + pairing(b, d1, a2));
    CHECK(pairing(b, 3 * d1, a1) == 3 * pairing(b, d1, a1));
  }
}

TEST_CASE("rank mismatch is rejected") {
  const auto b = blowup_point(2);
  CHECK_THROWS_AS(pairing(b, DivisorClass{1}, CurveClass{1, 0}), LatticeError);
  CHECK_THROWS_AS(CurveClass({1}) + CurveClass({1, 0}), LatticeError);
}

TEST_CASE("bundle c1 and the blow-up identification") {
  for (int n = 2; n <= 6; ++n) {
    const auto c1 = proj_bundle_c1(DivisorExpr::symbol("H'", n), DivisorExpr::symbol("H'", -1), 2);
    CHECK(c1.coefficient("H'") == n - 1);
    CHECK(c1.coefficient("xi") == -2);
    const auto b = blowup_point(n);
    const auto ident = bundle_blowup_identification(b);
    CHECK(evaluate_formal(c1, ident, b, b.curve("f")) == n + 1);
    CHECK(evaluate_formal(c1, ident, b, b.curve("e")) == n - 1);
  }
}

TEST_CASE("rank one bundle is the base") {
  const auto c1 = proj_bundle_c1(DivisorExpr::symbol("c1X"), DivisorExpr{}, 1);
  CHECK(c1 == DivisorExpr{{"c1X", 1}, {"xi", -1}});
}

TEST_CASE("bundle c1 over the exceptional divisor") {
  const auto c1 = proj_bundle_c1(DivisorExpr::symbol("c1E"), DivisorExpr::symbol("xi1"), 2);
  // c1(E) = c1(M) - (n-1) xi1 for n = 4
  const auto substituted = c1.substitute("c1E", DivisorExpr{{"c1M", 1}, {"xi1", -3}});
  CHECK(substituted == DivisorExpr{{"c1M", 1}, {"xi1", -2}, {"xi", -2}});
  CHECK(substituted.to_string() == "c1M - 2 xi - 2 xi1");
}

TEST_CASE("evaluate_formal rejects unmapped symbols") {
  const auto b = blowup_point(2);
  CHECK_THROWS_AS(evaluate_formal(DivisorExpr::symbol("Q"), {}, b, b.curve("f")), LatticeError);
}

TEST_CASE("p_shriek sends lines to total transforms") {
  const auto p3 = proj_space(3);
  const auto b = blowup_point(3);
  CHECK(p_shriek(p3, b, CurveClass{0}) == b.zero_curve());
  CHECK(p_shriek(p3, b, CurveClass{1}) == b.curve("f"));
  CHECK(p_shriek(p3, b, CurveClass{3}) == 3 * b.curve("f"));
  CHECK(c1_eval(b, p_shriek(p3, b, CurveClass{4})) == c1_eval(p3, CurveClass{4}));
}

TEST_CASE("mori decomposition") {
  const auto b = blowup_point(2);
  const auto f = b.curve("f");
  const auto e = b.curve("e");
  for (int k = 1; k <= 5; ++k) {
    // k L + k e = k f
    CHECK(mori_decompose(b, k * b.curve("L") + k * e) == MoriDecomposition{k, 2 * k});
    CHECK(mori_decompose(b, k * f - e) == MoriDecomposition{k, 2 * k - 1});
  }
  CHECK_FALSE(mori_decompose(b, -1 * f).has_value());
  CHECK(mori_decompose(b, e) == MoriDecomposition{0, 1});
  for (std::int64_t a = 0; a <= 4; ++a)
    for (std::int64_t bb = 0; bb <= 6; ++bb) CHECK(mori_decompose(b, recompose(b, {a, bb})) == MoriDecomposition{a, bb});
}

TEST_CASE("blow-up along a submanifold keeps the pulled-back sublattice") {
  const auto p3 = proj_space(3);
  const auto bl = blowup_along(p3, "C", 1);
  CHECK(bl.key() == "Bl_C(P3)");
  CHECK(p_shriek(p3, bl, CurveClass{2}) == CurveClass{2});
  CHECK_THROWS_AS(blowup_along(p3, "S", 2), LatticeError);
}

TEST_CASE("json round trip") {
  const auto b = blowup_point(4);
  CHECK(spec_from_json(to_json(b.spec())) == b.spec());
  const CurveClass a{3, -1};
  CHECK(curve_from_json(b, to_json(a)) == a);
  CHECK(format_curve(b, a) == "3f-e");
  CHECK(format_curve(b, CurveClass{0, 2}) == "2e");
  CHECK(format_curve(b, b.zero_curve()) == "0");
}

TEST_CASE("exact rationals") {
  const auto x = ExactRational::parse("6/4");
  CHECK(x.to_string() == "3/2");
  CHECK(ExactRational(12).to_string() == "12");
  CHECK(ExactRational(12).to_fraction_string() == "12/1");
  CHECK(x + ExactRational::parse("1/2") == ExactRational(2));
  CHECK((x * ExactRational(2)).is_integer());
  CHECK(ExactRational(-3).sign() < 0);
  CHECK_THROWS(ExactRational::parse("1/0"));
  CHECK_THROWS(ExactRational::parse("abc"));
}
