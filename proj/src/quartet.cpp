#include "quartsum/quartet.hpp"

#include <algorithm>
#include <utility>

#include "quartsum/error.hpp"

namespace quartsum {

namespace {

Integer sum_of_fourth_powers(std::span<const Integer> values) {
  Integer total = 0;
  for (const Integer& v : values) total += pow4(v);
  return total;
}

Integer magnitude(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

bool verify_identity(std::span<const Integer> lhs, std::span<const Integer> rhs) {
  if (lhs.empty() || rhs.empty()) {
    throw Error(ErrorKind::InvalidArgument, "verify_identity needs nonempty sides");
  }
  return sum_of_fourth_powers(lhs) == sum_of_fourth_powers(rhs);
}

Quartet canonicalize(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  Integer m[4] = {magnitude(a), magnitude(b), magnitude(c), magnitude(d)};

  auto first = std::minmax(m[0], m[1]);
  auto second = std::minmax(m[2], m[3]);
  if (first == second) {
    throw Error(ErrorKind::TrivialSolution,
                "trivial solution: both sides are the same pair {" + m[0].str() + ", " +
                    m[1].str() + "}");
  }
  if (std::any_of(std::begin(m), std::end(m), [](const Integer& v) { return v == 0; })) {
    throw Error(ErrorKind::ZeroMember, "quartet member is zero");
  }
  if (!verify_identity(std::span<const Integer>(m, 2), std::span<const Integer>(m + 2, 2))) {
    throw Error(ErrorKind::NotASolution, m[0].str() + "^4 + " + m[1].str() + "^4 != " +
                                             m[2].str() + "^4 + " + m[3].str() + "^4");
  }

  const Integer g = gcd(gcd(m[0], m[1]), gcd(m[2], m[3]));
  for (Integer& v : m) v /= g;

  if (m[0] < m[1]) std::swap(m[0], m[1]);
  if (m[2] < m[3]) std::swap(m[2], m[3]);
  // Equal leading members would force the trailing ones equal as well,
  // which is the trivial case rejected above.
  if (m[0] < m[2]) {
    std::swap(m[0], m[2]);
    std::swap(m[1], m[3]);
  }
  return Quartet(std::move(m[0]), std::move(m[1]), std::move(m[2]), std::move(m[3]));
}

}  // namespace quartsum
