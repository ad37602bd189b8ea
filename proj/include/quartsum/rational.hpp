#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "quartsum/integer.hpp"

namespace quartsum {

// Exact fraction kept in lowest terms with a positive denominator, so two
// Rationals are equal iff their members are equal.
class Rational {
 public:
  Rational() = default;
  Rational(Integer num);  // NOLINT: implicit widening from Integer is intended
  Rational(long long num) : Rational(Integer(num)) {}  // NOLINT
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws Error(InvalidArgument) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  Integer num_{0};
  Integer den_{1};
};

Rational abs(const Rational& q);
Rational pow(const Rational& q, unsigned exponent);

/// The nonnegative rational square root of q when one exists.
std::optional<Rational> sqrt_exact(const Rational& q);

/// Accepts "n" or "n/m" with an optional leading '-' on n; m must be a
/// positive integer. Decimals are rejected.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/m" otherwise.
std::string to_string(const Rational& q);

}  // namespace quartsum
