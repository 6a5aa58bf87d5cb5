#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace gwb {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always kept reduced with a positive
// denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  explicit ExactRational(const BigInt& value) : value_(value) {}
  ExactRational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  // "12" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Always "p/q", the persisted cache form.
  std::string to_fraction_string() const;
  // Accepts "p", "p/q", "-p/q"; throws std::invalid_argument otherwise.
  static ExactRational parse(std::string_view text);

  ExactRational& operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactRational& operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  ExactRational& operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) {
    ExactRational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

 private:
  boost::multiprecision::cpp_rational value_{0};
};

}  // namespace gwb
