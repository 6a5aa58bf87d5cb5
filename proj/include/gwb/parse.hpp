#pragma once

#include "gwb/query.hpp"
#include "gwb/rules.hpp"

#include <stdexcept>
#include <string_view>

namespace gwb::parse {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "P2", "P5", "BlP2", "BlP3".
Manifold manifold(std::string_view text);

// Signed integer coefficients on basis letters, no whitespace: "3f-1e",
// "2l", "-f", "e", "0".
CurveClass curve(const Manifold& m, std::string_view text);

// "1", "pt", "H", "H^k" (P^n), "h", "E" (divisors on a blow-up), "PD(E)",
// "p*<base>" for a pulled-back P^n class; "@away" suffix sets the
// support-away-from-locus flag.
Insertion insertion(const Manifold& m, std::string_view text);

// Comma-separated list of insertion tokens.
std::vector<Insertion> insertions(const Manifold& m, std::string_view text);

// "curve:g0=1,c1=0", "surface:K3", "surface:torus", "surface:product:1x2",
// "surface:other"; ambient dimension taken from `ambient_n`.
rules::BlowupLocus locus(std::string_view text, int ambient_n);

// "1..5" or "3".
rules::VerifyRange range(std::string_view text);

}  // namespace gwb::parse
