#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/degree_sequence.hpp"

namespace degseq {

// Counters from one or more counting runs. `leaves` counts base-case (and
// pruned) returns and is kept exact; the others are plain tallies. All are
// monotone while a run is in flight.
struct RecursionStats {
  Count leaves = 0;
  std::uint64_t calls = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;

  void reset() { *this = RecursionStats{}; }
  friend bool operator==(const RecursionStats&, const RecursionStats&) = default;
};

// Memo table from canonical degree sequences to exact counts. Only true
// counts are ever stored, so entries can be shared freely across calls,
// across families, and across processes via the cache file format; a warm
// cache changes speed, never values. Not internally synchronized: the
// baseline is single-threaded use, concurrent sharing needs external
// locking.
class MemoCache {
 public:
  using Map = std::unordered_map<std::vector<int>, Count, DegreeVectorHash>;

  // nullptr when absent. The returned pointer stays valid across inserts.
  const Count* find(const std::vector<int>& canonical_degrees) const {
    auto it = entries_.find(canonical_degrees);
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Get-or-insert: keeps the existing value if the key is already present.
  const Count& store(std::vector<int> canonical_degrees, Count value) {
    return entries_.emplace(std::move(canonical_degrees), std::move(value))
        .first->second;
  }

  bool contains(const std::vector<int>& canonical_degrees) const {
    return entries_.contains(canonical_degrees);
  }

  std::size_t size() const noexcept { return entries_.size(); }
  void clear() { entries_.clear(); }
  const Map& entries() const noexcept { return entries_; }

  RecursionStats& stats() noexcept { return stats_; }
  const RecursionStats& stats() const noexcept { return stats_; }

 private:
  Map entries_;
  RecursionStats stats_;
};

}  // namespace degseq
