#include "degseq/enumeration.hpp"

#include <cstdint>
#include <vector>

#include "degseq/realizability.hpp"
#include "degseq/subsets.hpp"

namespace degseq {

namespace {

bool odd_sum(const std::vector<int>& degrees) {
  unsigned parity = 0;
  for (int x : degrees) parity ^= static_cast<unsigned>(x);
  return (parity & 1u) != 0;
}

// Recursion over canonical degree vectors. `d` may alias the caller's
// scratch buffer; it is not touched again until this call returns. Returns
// a reference into the cache, which is reference-stable across inserts.
const Count& count_rec(const std::vector<int>& d, MemoCache& cache,
                       const CountOptions& options) {
  RecursionStats& stats = cache.stats();
  ++stats.calls;
  if (const Count* hit = cache.find(d)) {
    ++stats.cache_hits;
    return *hit;
  }
  ++stats.cache_misses;

  const int n = static_cast<int>(d.size());
  Count total = 0;
  bool is_leaf = true;
  if (n == 0) {
    total = 1;  // the empty graph
  } else if (n == 1) {
    total = 0;  // a single vertex cannot have positive degree
  } else if (odd_sum(d)) {
    total = 0;  // handshake lemma
  } else if (d.front() >= n) {
    total = 0;  // max degree of a simple graph on n vertices is n-1
  } else if (options.erdos_gallai_prune && !detail::erdos_gallai(d)) {
    total = 0;
  } else {
    is_leaf = false;
    const int k = d.back();
    std::vector<int> child;
    child.reserve(n - 1);
    for (std::span<const int> s : KSubsets(n - 1, k)) {
      detail::reduce_into(d, s, child);
      total += count_rec(child, cache, options);
    }
  }
  if (is_leaf) ++stats.leaves;
  return cache.store(d, std::move(total));
}

struct LeafWalk {
  std::uint64_t budget;
  std::uint64_t leaves = 0;
  std::uint64_t calls = 0;

  // Bare recurrence, no memoization, no pruning beyond the base cases:
  // this is exactly the tree whose leaf count the bench compares against
  // the binom(n,m)^n bound. Returns false once the budget is blown.
  bool walk(const std::vector<int>& d) {
    ++calls;
    const int n = static_cast<int>(d.size());
    if (n <= 1 || odd_sum(d)) {
      return ++leaves <= budget;
    }
    const int k = d.back();
    std::vector<int> child;
    child.reserve(n - 1);
    for (std::span<const int> s : KSubsets(n - 1, k)) {
      detail::reduce_into(d, s, child);
      if (!walk(child)) return false;
    }
    return true;
  }
};

}  // namespace

Count count(const DegreeSequence& d, MemoCache& cache, const CountOptions& options) {
  return count_rec(d.degrees(), cache, options);
}

Count count_leaves(const DegreeSequence& d, RecursionStats* stats) {
  // No practical walk can overflow the 64-bit tallies: the walk itself is
  // the bottleneck long before that.
  auto result = count_leaves_within(d, UINT64_MAX, stats);
  return std::move(*result);
}

std::optional<Count> count_leaves_within(const DegreeSequence& d, std::uint64_t max_leaves,
                                         RecursionStats* stats) {
  LeafWalk walk{max_leaves};
  const bool finished = walk.walk(d.degrees());
  if (stats != nullptr) {
    stats->calls += walk.calls;
    stats->leaves += walk.leaves;
  }
  if (!finished) return std::nullopt;
  return Count(walk.leaves);
}

}  // namespace degseq
