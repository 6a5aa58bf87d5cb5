#include "gwb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gwb {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (text[pos] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = boost::multiprecision::cpp_rational(num, den);
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string ExactRational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string ExactRational::to_fraction_string() const { return numerator().str() + "/" + denominator().str(); }

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return ExactRational(num, den);
}

}  // namespace gwb
