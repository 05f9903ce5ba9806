#include "degseq/subsets.hpp"

#include <numeric>
#include <stdexcept>

namespace degseq {

KSubsets::KSubsets(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0) throw std::invalid_argument("KSubsets: negative n or k");
}

KSubsets::iterator::iterator(int n, int k) : n_(n), k_(k), done_(k > n) {
  if (!done_) {
    current_.resize(k);
    std::iota(current_.begin(), current_.end(), 1);
  }
}

KSubsets::iterator& KSubsets::iterator::operator++() {
  // Lexicographic successor: bump the rightmost entry that still has
  // headroom, then restack everything after it.
  int i = k_ - 1;
  while (i >= 0 && current_[i] == n_ - k_ + i + 1) --i;
  if (i < 0) {
    done_ = true;
    return *this;
  }
  ++current_[i];
  for (int j = i + 1; j < k_; ++j) current_[j] = current_[j - 1] + 1;
  return *this;
}

}  // namespace degseq
