#include "quartsum/rational.hpp"

#include <utility>

#include "quartsum/error.hpp"

namespace quartsum {

Rational::Rational(Integer num) : num_(std::move(num)), den_(1) {}

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Integer lhs = a.num_ * b.den_;
  const Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, unsigned exponent) {
  Rational result{1};
  for (unsigned i = 0; i < exponent; ++i) result *= q;
  return result;
}

std::optional<Rational> sqrt_exact(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  // In lowest terms q is a rational square iff numerator and denominator
  // are both integer squares.
  const Integer rn = isqrt(q.num());
  if (rn * rn != q.num()) return std::nullopt;
  const Integer rd = isqrt(q.den());
  if (rd * rd != q.den()) return std::nullopt;
  return Rational(rn, rd);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));

  const std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-') {
    throw Error(ErrorKind::ParseError, "expected n or n/m, got '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Rational& q) {
  if (q.is_integer()) return q.num().str();
  return q.num().str() + "/" + q.den().str();
}

}  // namespace quartsum
