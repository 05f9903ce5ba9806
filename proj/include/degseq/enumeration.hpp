#pragma once

#include <cstdint>
#include <optional>

#include "degseq/bigint.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/memo_cache.hpp"

namespace degseq {

struct CountOptions {
  // Cut unrealizable subtrees with an Erdős–Gallai test before recursing.
  // Off by default so the library runs the bare recurrence; the CLI turns
  // it on. Pruned subtrees contribute 0, so results are identical either
  // way and cached values stay valid across both modes.
  bool erdos_gallai_prune = false;
};

// C(d): the number of labeled simple graphs in which vertex i has degree
// d_i exactly. Computed by peeling the last (minimum-degree) vertex and
// summing over every possible neighbor set, memoized in `cache`. The result
// is deterministic regardless of how the cache is pre-populated.
Count count(const DegreeSequence& d, MemoCache& cache, const CountOptions& options = {});

// #C(d): the number of leaves of the bare, unmemoized recursion tree — the
// complexity measure for the recurrence. This walks the whole tree, so the
// cost is proportional to the returned value; use count_leaves_within for
// inputs that might be out of reach. When `stats` is given, its calls and
// leaves tallies are updated.
Count count_leaves(const DegreeSequence& d, RecursionStats* stats = nullptr);

// As count_leaves, but abandons the walk and returns nullopt as soon as
// more than max_leaves leaves have been visited.
std::optional<Count> count_leaves_within(const DegreeSequence& d, std::uint64_t max_leaves,
                                         RecursionStats* stats = nullptr);

}  // namespace degseq
