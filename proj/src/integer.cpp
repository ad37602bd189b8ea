#include "quartsum/integer.hpp"

#include <cctype>
#include <utility>

#include "quartsum/error.hpp"

namespace quartsum {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::ZeroX: return "ZeroX";
    case ErrorKind::ZeroR: return "ZeroR";
    case ErrorKind::TrivialSolution: return "TrivialSolution";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::ZeroMember: return "ZeroMember";
    case ErrorKind::SearchLimitExceeded: return "SearchLimitExceeded";
  }
  return "Unknown";
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer l = a / gcd(a, b) * b;
  return l < 0 ? Integer(-l) : l;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of a negative number");
  if (n < 2) return n;

  // Start above the root: 2^ceil((bits+1)/2) > sqrt(n). From there Newton's
  // step decreases monotonically until it reaches floor(sqrt(n)).
  const auto bits = boost::multiprecision::msb(n) + 1;
  Integer x = Integer(1) << ((bits + 1) / 2);
  for (;;) {
    Integer next = (x + n / x) >> 1;
    if (next >= x) return x;
    x = std::move(next);
  }
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  const Integer r = isqrt(n);
  return r * r == n;
}

Integer pow4(const Integer& n) {
  const Integer sq = n * n;
  return sq * sq;
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& n) { return n.str(); }

}  // namespace quartsum
