#include "degseq/realizability.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace degseq {

namespace detail {

bool erdos_gallai(std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  long long sum = 0;
  for (int x : degrees) sum += x;
  if (sum % 2 != 0) return false;

  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += degrees[k - 1];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(degrees[i], k);
    if (prefix > rhs) return false;
  }
  return true;
}

bool havel_hakimi(std::span<const int> degrees) {
  std::vector<int> d(degrees.begin(), degrees.end());
  while (!d.empty()) {
    const int top = d.front();
    const int rest = static_cast<int>(d.size()) - 1;
    if (top > rest) return false;
    d.erase(d.begin());
    for (int i = 0; i < top; ++i) --d[i];
    std::sort(d.begin(), d.end(), std::greater<>());
    while (!d.empty() && d.back() == 0) d.pop_back();
  }
  return true;
}

}  // namespace detail

bool erdos_gallai(const DegreeSequence& d) { return detail::erdos_gallai(d.degrees()); }

bool havel_hakimi(const DegreeSequence& d) { return detail::havel_hakimi(d.degrees()); }

}  // namespace degseq
