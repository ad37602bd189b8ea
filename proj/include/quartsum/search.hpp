#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quartsum/integer.hpp"
#include "quartsum/quartet.hpp"

namespace quartsum {

/// A common value of a^4 + b^4 and every pair (a, b), a >= b >= 1, that
/// realizes it. Pairs are ordered by descending first member.
struct SearchHit {
  Integer sum;
  std::vector<std::pair<Integer, Integer>> pairs;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

/// Refuse limits above this unless the caller raises the guard. At 20000 the
/// pair table holds about 2e8 entries of 16 bytes.
inline constexpr std::uint64_t kDefaultSearchGuard = 20000;

/// Largest limit for which 2 * limit^4 fits in 64 bits. Sums are kept in
/// uint64_t during enumeration, so this bound is never lifted.
inline constexpr std::uint64_t kMaxSearchLimit = 55108;

/// Largest limit accepted by naive_oracle.
inline constexpr std::uint64_t kNaiveOracleLimit = 300;

struct SearchConfig {
  std::uint64_t guard = kDefaultSearchGuard;
  /// Worker threads used to fill the pair table; the result does not depend
  /// on this value.
  unsigned threads = 1;
};

/// Every sum realized by two or more pairs with 1 <= b <= a <= limit, sorted
/// by sum. With primitive_only, a hit is kept only if two of its pairs have
/// collective gcd 1 (all of its pairs are still reported).
/// Errors: InvalidArgument for limit < 1; SearchLimitExceeded above the guard
/// or kMaxSearchLimit.
std::vector<SearchHit> enumerate_hits(const Integer& limit, bool primitive_only,
                                      const SearchConfig& config = {});

/// Primitive quartet with the smallest common sum among pairs bounded by
/// limit. Walks pair sums in increasing order with O(limit) memory and stops
/// at the first primitive collision.
std::optional<Quartet> min_quartet(const Integer& limit, const SearchConfig& config = {});

/// Reference for enumerate_hits(limit, false): compares every pair against
/// every other pair using big-integer fourth powers. limit <= 300.
std::vector<SearchHit> naive_oracle(const Integer& limit);

}  // namespace quartsum
