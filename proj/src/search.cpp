#include "quartsum/search.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <span>
#include <thread>

#include "quartsum/error.hpp"

namespace quartsum {

namespace {

struct PairSum {
  std::uint64_t sum;
  std::uint32_t a;
  std::uint32_t b;
};

constexpr std::uint64_t fourth(std::uint64_t v) { return v * v * v * v; }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t checked_limit(const Integer& limit, const SearchConfig& config) {
  if (limit < 1) throw Error(ErrorKind::InvalidArgument, "search limit must be at least 1");
  if (limit > kMaxSearchLimit) {
    throw Error(ErrorKind::SearchLimitExceeded,
                "search limit " + limit.str() + " exceeds the 64-bit sum bound " +
                    std::to_string(kMaxSearchLimit));
  }
  const auto n = limit.convert_to<std::uint64_t>();
  if (n > config.guard) {
    const std::uint64_t pairs = n * (n + 1) / 2;
    throw Error(ErrorKind::SearchLimitExceeded,
                "search limit " + std::to_string(n) + " needs " + std::to_string(pairs) +
                    " table entries (" + std::to_string(pairs * sizeof(PairSum) >> 20) +
                    " MiB), above the memory guard of " + std::to_string(config.guard) +
                    "; raise the guard to proceed");
  }
  return n;
}

// Pairs with first member a occupy [a(a-1)/2, a(a+1)/2), so slices filled by
// different threads never overlap and the table is the same for any split.
void fill_rows(std::vector<PairSum>& table, std::uint64_t a_begin, std::uint64_t a_end) {
  for (std::uint64_t a = a_begin; a < a_end; ++a) {
    const std::uint64_t a4 = fourth(a);
    std::size_t at = a * (a - 1) / 2;
    for (std::uint64_t b = 1; b <= a; ++b) {
      table[at++] = {a4 + fourth(b), static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    }
  }
}

std::vector<PairSum> build_table(std::uint64_t n, unsigned threads) {
  std::vector<PairSum> table(n * (n + 1) / 2);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    fill_rows(table, 1, n + 1);
  } else {
    // Rows grow linearly, so split on equal pair counts rather than equal
    // row counts.
    std::vector<std::jthread> workers;
    std::uint64_t start = 1;
    for (unsigned t = 1; t <= threads; ++t) {
      std::uint64_t stop = n + 1;
      if (t < threads) {
        const double frac = static_cast<double>(t) / threads;
        stop = std::max<std::uint64_t>(start, static_cast<std::uint64_t>(n * std::sqrt(frac)) + 1);
      }
      workers.emplace_back([&table, start, stop] { fill_rows(table, start, stop); });
      start = stop;
    }
  }
  // (sum, a) is unique per entry, so the order is total.
  std::sort(table.begin(), table.end(), [](const PairSum& l, const PairSum& r) {
    return l.sum != r.sum ? l.sum < r.sum : l.a > r.a;
  });
  return table;
}

bool has_primitive_combination(std::span<const PairSum> run) {
  for (std::size_t i = 0; i < run.size(); ++i) {
    for (std::size_t j = i + 1; j < run.size(); ++j) {
      const std::uint64_t g = gcd_u64(gcd_u64(run[i].a, run[i].b), gcd_u64(run[j].a, run[j].b));
      if (g == 1) return true;
    }
  }
  return false;
}

SearchHit to_hit(std::span<const PairSum> run) {
  SearchHit hit{Integer(run.front().sum), {}};
  hit.pairs.reserve(run.size());
  for (const PairSum& e : run) hit.pairs.emplace_back(Integer(e.a), Integer(e.b));
  return hit;
}

}  // namespace

std::vector<SearchHit> enumerate_hits(const Integer& limit, bool primitive_only,
                                      const SearchConfig& config) {
  const std::uint64_t n = checked_limit(limit, config);
  const std::vector<PairSum> table = build_table(n, config.threads);

  std::vector<SearchHit> hits;
  for (std::size_t i = 0; i < table.size();) {
    std::size_t j = i + 1;
    while (j < table.size() && table[j].sum == table[i].sum) ++j;
    if (j - i >= 2) {
      const std::span<const PairSum> run(table.data() + i, j - i);
      if (!primitive_only || has_primitive_combination(run)) hits.push_back(to_hit(run));
    }
    i = j;
  }
  return hits;
}

std::optional<Quartet> min_quartet(const Integer& limit, const SearchConfig& config) {
  const std::uint64_t n = checked_limit(limit, config);

  // Each queued entry is the next unvisited pair (a, b) for a fixed b. The
  // entry for b + 1 is queued once (b, b) is popped, since 2(b+1)^4 > 2b^4.
  auto later = [](const PairSum& l, const PairSum& r) { return l.sum > r.sum; };
  std::priority_queue<PairSum, std::vector<PairSum>, decltype(later)> frontier(later);
  frontier.push({2, 1, 1});

  std::vector<PairSum> run;
  auto flush = [&]() -> std::optional<Quartet> {
    for (std::size_t i = 0; i < run.size(); ++i) {
      for (std::size_t j = i + 1; j < run.size(); ++j) {
        const PairSum& u = run[i];
        const PairSum& v = run[j];
        if (gcd_u64(gcd_u64(u.a, u.b), gcd_u64(v.a, v.b)) == 1) {
          return canonicalize(Integer(u.a), Integer(u.b), Integer(v.a), Integer(v.b));
        }
      }
    }
    return std::nullopt;
  };

  while (!frontier.empty()) {
    const PairSum top = frontier.top();
    frontier.pop();
    if (top.a == top.b && top.b < n) {
      const std::uint64_t nb = top.b + 1;
      frontier.push({2 * fourth(nb), static_cast<std::uint32_t>(nb), static_cast<std::uint32_t>(nb)});
    }
    if (top.a < n) {
      const std::uint64_t na = top.a + 1;
      frontier.push({fourth(na) + fourth(top.b), static_cast<std::uint32_t>(na), top.b});
    }

    if (!run.empty() && run.front().sum != top.sum) {
      if (auto q = flush()) return q;
      run.clear();
    }
    run.push_back(top);
  }
  return flush();
}

std::vector<SearchHit> naive_oracle(const Integer& limit) {
  if (limit < 1) throw Error(ErrorKind::InvalidArgument, "search limit must be at least 1");
  if (limit > kNaiveOracleLimit) {
    throw Error(ErrorKind::SearchLimitExceeded,
                "naive oracle is limited to " + std::to_string(kNaiveOracleLimit));
  }
  const auto n = limit.convert_to<unsigned>();

  struct Entry {
    Integer sum;
    unsigned a, b;
  };
  std::vector<Entry> pairs;
  for (unsigned a = 1; a <= n; ++a) {
    for (unsigned b = 1; b <= a; ++b) pairs.push_back({pow4(Integer(a)) + pow4(Integer(b)), a, b});
  }

  std::vector<bool> claimed(pairs.size(), false);
  std::vector<SearchHit> hits;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (claimed[i]) continue;
    SearchHit hit{pairs[i].sum, {{Integer(pairs[i].a), Integer(pairs[i].b)}}};
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[j].sum == pairs[i].sum) {
        claimed[j] = true;
        hit.pairs.emplace_back(Integer(pairs[j].a), Integer(pairs[j].b));
      }
    }
    if (hit.pairs.size() < 2) continue;
    std::sort(hit.pairs.begin(), hit.pairs.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    hits.push_back(std::move(hit));
  }
  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& l, const SearchHit& r) { return l.sum < r.sum; });
  return hits;
}

}  // namespace quartsum
