#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/enumeration.hpp"
#include "degseq/oracles.hpp"
#include "degseq/subsets.hpp"
#include "doctest.h"

using degseq::canonicalize;
using degseq::Count;
using degseq::CountOptions;
using degseq::DegreeSequence;
using degseq::MemoCache;

namespace {

Count fresh_count(const DegreeSequence& d, const CountOptions& options = {}) {
  MemoCache cache;
  return degseq::count(d, cache, options);
}

// Enumerates every canonical sequence with length <= max_len and entries
// <= max_degree, calling f on each.
template <typename F>
void for_each_canonical(int max_len, int max_degree, F&& f) {
  std::vector<int> seq;
  auto rec = [&](auto&& self, int max_next) -> void {
    f(DegreeSequence::from_canonical(seq));
    if (static_cast<int>(seq.size()) == max_len) return;
    for (int v = max_next; v >= 1; --v) {
      seq.push_back(v);
      self(self, v);
      seq.pop_back();
    }
  };
  rec(rec, max_degree);
}

}  // namespace

TEST_CASE("count: base cases") {
  CHECK(fresh_count(DegreeSequence{}) == 1);
  CHECK(fresh_count(canonicalize({5})) == 0);
  CHECK(fresh_count(canonicalize({1})) == 0);
  CHECK(fresh_count(canonicalize({1, 1, 1})) == 0);  // odd sum
  CHECK(fresh_count(canonicalize({1, 1})) == 1);
}

TEST_CASE("count: complete graphs are unique realizations") {
  MemoCache cache;
  for (int n = 2; n <= 8; ++n) {
    CHECK(degseq::count(DegreeSequence::from_canonical(std::vector<int>(n, n - 1)), cache) == 1);
  }
}

TEST_CASE("count: pinned small values") {
  CHECK(fresh_count(canonicalize({2, 2, 2, 2})) == 3);
  CHECK(fresh_count(canonicalize({3, 3, 2, 2, 2})) == 7);
  CHECK(fresh_count(canonicalize({3, 1, 1, 1})) == 1);
  CHECK(fresh_count(canonicalize({3, 3, 1, 1, 1, 1})) == 6);
}

TEST_CASE("count: max-degree prune is sound") {
  CHECK(fresh_count(canonicalize({4, 1, 1, 1})) == 0);
  CHECK(fresh_count(canonicalize({3, 3})) == 0);
}

TEST_CASE("count agrees with both oracles for n <= 6, d_i <= 5") {
  MemoCache cache;
  for_each_canonical(6, 5, [&](const DegreeSequence& d) {
    const Count c = degseq::count(d, cache);
    CHECK(c == degseq::brute_force_count(d));
    CHECK(c == degseq::mckay_count(d));
  });
}

TEST_CASE("recurrence consistency at the root") {
  // count(d) must equal the subset-sum of counts of the reductions, with a
  // cold cache and with a pre-populated one.
  const auto cases = {
      canonicalize({2, 2, 2, 2}),       canonicalize({3, 3, 2, 2, 2}),
      canonicalize({4, 3, 3, 2, 2, 2}), canonicalize({3, 3, 3, 3}),
      canonicalize({2, 2, 1, 1}),
  };
  for (const auto& d : cases) {
    const int n = d.length();
    Count subset_sum = 0;
    MemoCache warm;
    for (std::span<const int> s : degseq::KSubsets(n - 1, d.min_degree())) {
      subset_sum += degseq::count(degseq::reduce(d, s), warm);
    }
    CHECK(subset_sum == fresh_count(d));
    CHECK(subset_sum == degseq::count(d, warm));  // warm now holds every child
  }
}

TEST_CASE("cache transparency: pre-population never changes a count") {
  const auto d = canonicalize({4, 3, 3, 2, 2, 2, 2});
  MemoCache cold;
  const Count expected = degseq::count(d, cold);

  MemoCache warm;
  for (const auto& [key, value] : cold.entries()) {
    if (key.size() < 4) warm.store(key, value);  // partial pre-population
  }
  CHECK(degseq::count(d, warm) == expected);

  MemoCache full;
  for (const auto& [key, value] : cold.entries()) full.store(key, value);
  CHECK(degseq::count(d, full) == expected);
}

TEST_CASE("zero padding never changes a count") {
  const std::vector<std::vector<int>> raws = {
      {2, 2, 2, 2}, {3, 1, 1, 1}, {1, 1}, {}};
  for (auto raw : raws) {
    const Count base = fresh_count(canonicalize(raw));
    raw.insert(raw.end(), 3, 0);
    CHECK(fresh_count(canonicalize(raw)) == base);
  }
}

TEST_CASE("erdos-gallai pruning changes stats, never values") {
  for_each_canonical(6, 4, [&](const DegreeSequence& d) {
    CHECK(fresh_count(d) == fresh_count(d, CountOptions{.erdos_gallai_prune = true}));
  });
}

TEST_CASE("count is deterministic, including stats") {
  const auto d = canonicalize({3, 3, 2, 2, 2, 1, 1});
  MemoCache a;
  MemoCache b;
  CHECK(degseq::count(d, a) == degseq::count(d, b));
  CHECK(a.stats() == b.stats());
  CHECK(a.size() == b.size());
}

TEST_CASE("count_leaves: base cases and hand-expanded trees") {
  CHECK(degseq::count_leaves(DegreeSequence{}) == 1);
  CHECK(degseq::count_leaves(canonicalize({7})) == 1);
  CHECK(degseq::count_leaves(canonicalize({2, 2, 2})) == 1);
  // (2,2,2,2): three 2-subsets of {1,2,3}, each reducing to (2,1,1);
  // #C((2,1,1)) = #C((1,1)) + #C((2)) = 1 + 1 = 2, so 3 * 2 = 6.
  CHECK(degseq::count_leaves(canonicalize({2, 2, 2, 2})) == 6);
}

TEST_CASE("count_leaves satisfies the leaf recurrence at depth 1") {
  const auto cases = {
      canonicalize({2, 2, 2, 2}),
      canonicalize({3, 3, 2, 2, 2}),
      canonicalize({3, 3, 3, 3, 2, 2}),
      canonicalize({2, 2, 2, 1, 1}),
  };
  for (const auto& d : cases) {
    Count children = 0;
    for (std::span<const int> s : degseq::KSubsets(d.length() - 1, d.min_degree())) {
      children += degseq::count_leaves(degseq::reduce(d, s));
    }
    CHECK(children == degseq::count_leaves(d));
  }
}

TEST_CASE("count_leaves is deterministic, including stats") {
  const auto d = canonicalize({3, 3, 2, 2, 2});
  degseq::RecursionStats s1;
  degseq::RecursionStats s2;
  CHECK(degseq::count_leaves(d, &s1) == degseq::count_leaves(d, &s2));
  CHECK(s1 == s2);
  CHECK(s1.leaves <= Count(s1.calls));
}

TEST_CASE("count_leaves_within respects its budget") {
  const auto d = canonicalize({2, 2, 2, 2});
  CHECK(degseq::count_leaves_within(d, 6).value() == 6);
  CHECK(!degseq::count_leaves_within(d, 5).has_value());
  CHECK(!degseq::count_leaves_within(d, 0).has_value());
}

TEST_CASE("loose leaf bound: #C(d) <= binom(n,m)^n for d_i <= m, n >= 2m") {
  for (int m = 2; m <= 3; ++m) {
    for (int n = 2 * m; n <= 2 * m + (m == 2 ? 3 : 2); ++n) {
      for_each_canonical(n, m, [&](const DegreeSequence& d) {
        if (d.length() != n || d.max_degree() > m) return;
        Count bound = 1;
        const Count base = degseq::binomial(n, m);
        for (int i = 0; i < n; ++i) bound *= base;
        CHECK(degseq::count_leaves(d) <= bound);
      });
    }
  }
}

TEST_CASE("memoized leaf tally never exceeds the unmemoized leaf count") {
  for (int n = 4; n <= 8; ++n) {
    const auto d = DegreeSequence::from_canonical(std::vector<int>(n, 2));
    MemoCache cache;
    degseq::count(d, cache);
    CHECK(Count(cache.stats().cache_misses) <= degseq::count_leaves(d));
    CHECK(cache.stats().leaves <= Count(cache.stats().calls));
  }
}
