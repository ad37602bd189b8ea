#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quartsum {

/// Signed arbitrary-precision integer. Zero has a single representation and
/// no operation overflows.
using Integer = boost::multiprecision::cpp_int;

/// Nonnegative greatest common divisor; gcd(0, 0) == 0.
Integer gcd(Integer a, Integer b);

Integer lcm(const Integer& a, const Integer& b);

/// floor(sqrt(n)) by Newton iteration on integers. Throws
/// Error(InvalidArgument) for negative n.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

Integer pow4(const Integer& n);

/// Decimal parse: optional leading '-', then one or more digits.
/// Throws Error(ParseError) on anything else.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);

}  // namespace quartsum
