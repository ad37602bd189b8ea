#pragma once

#include <span>

#include "quartsum/integer.hpp"

namespace quartsum {

/// True iff the sums of fourth powers of both sides agree exactly.
/// Throws Error(InvalidArgument) if either side is empty.
bool verify_identity(std::span<const Integer> lhs, std::span<const Integer> rhs);

// Canonical primitive solution of a1^4 + b1^4 = a2^4 + b2^4.
//
// All members are positive with gcd 1, a1 >= b1, a2 >= b2, and a1 > a2 so
// that a1 is the largest member. Only canonicalize() constructs one.
class Quartet {
 public:
  const Integer& a1() const { return a1_; }
  const Integer& b1() const { return b1_; }
  const Integer& a2() const { return a2_; }
  const Integer& b2() const { return b2_; }

  /// The shared value a1^4 + b1^4.
  Integer common_sum() const { return pow4(a1_) + pow4(b1_); }

  friend bool operator==(const Quartet&, const Quartet&) = default;

  friend Quartet canonicalize(const Integer& a, const Integer& b, const Integer& c,
                              const Integer& d);

 private:
  Quartet(Integer a1, Integer b1, Integer a2, Integer b2)
      : a1_(std::move(a1)), b1_(std::move(b1)), a2_(std::move(a2)), b2_(std::move(b2)) {}

  Integer a1_, b1_, a2_, b2_;
};

/// Maps a signed, possibly scaled solution a^4 + b^4 = c^4 + d^4 to its
/// canonical Quartet. Errors, checked in this order:
///   TrivialSolution  {|a|,|b|} == {|c|,|d|}
///   ZeroMember       any member is zero
///   NotASolution     the fourth-power identity fails
Quartet canonicalize(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

}  // namespace quartsum
