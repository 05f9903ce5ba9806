#pragma once

#include <span>
#include <vector>

namespace degseq {

// Streams every k-subset of {1,...,n} exactly once, in lexicographic order.
// Memory stays O(k); nothing is materialized. k > n gives an empty range,
// k == 0 yields the single empty subset.
class KSubsets {
 public:
  // Throws std::invalid_argument when n or k is negative.
  KSubsets(int n, int k);

  class iterator {
   public:
    using value_type = std::span<const int>;

    // The span is only valid until the next increment.
    std::span<const int> operator*() const noexcept {
      return {current_.data(), current_.size()};
    }
    iterator& operator++();
    bool operator!=(std::default_sentinel_t) const noexcept { return !done_; }
    bool operator==(std::default_sentinel_t) const noexcept { return done_; }

   private:
    friend class KSubsets;
    iterator(int n, int k);
    std::vector<int> current_;
    int n_ = 0;
    int k_ = 0;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_, k_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  int n_;
  int k_;
};

}  // namespace degseq
