#include "degseq/families.hpp"

#include <stdexcept>
#include <vector>

namespace degseq {

Count regular_count(int n, int m, MemoCache& cache, const CountOptions& options) {
  if (n < 0) throw std::invalid_argument("regular_count: n must be >= 0");
  if (m < 1) throw std::invalid_argument("regular_count: m must be >= 1");
  if (m >= n || (n % 2 != 0 && m % 2 != 0)) return 0;
  return count(DegreeSequence::from_canonical(std::vector<int>(n, m)), cache, options);
}

Count binary_tree_count(int k, MemoCache& cache, const CountOptions& options) {
  if (k < 1) throw std::invalid_argument("binary_tree_count: k must be >= 1");
  std::vector<int> degrees(2 * k, 1);
  std::fill(degrees.begin(), degrees.begin() + (k - 1), 3);
  const Count fixed = count(DegreeSequence::from_canonical(std::move(degrees)), cache, options);
  return binomial(2 * k, k - 1) * fixed;
}

namespace {

DegreeSequence bipartite_sequence(int n, int m) {
  if (n < 1 || n > m) {
    throw std::invalid_argument("bipartite count: arguments must satisfy 1 <= n <= m");
  }
  std::vector<int> degrees(n + m, n);
  std::fill(degrees.begin(), degrees.begin() + n, m);
  return DegreeSequence::from_canonical(std::move(degrees));
}

}  // namespace

Count bipartite_count_raw(int n, int m, MemoCache& cache, const CountOptions& options) {
  return count(bipartite_sequence(n, m), cache, options);
}

Count bipartite_count_eq8(int n, int m, MemoCache& cache, const CountOptions& options) {
  const Count raw = bipartite_count_raw(n, m, cache, options);
  return n == m ? raw : binomial(n + m, n) * raw;
}

Count moon_tree_count(const DegreeSequence& d) {
  const int n = d.length();
  if (d.degree_sum() != 2LL * (n - 1)) return 0;
  // With the tree handshake satisfied, sum (d_i - 1) = n - 2 and every
  // d_i - 1 <= n - 2, so the multinomial below is well formed and exact.
  Count result = factorial(n - 2);
  for (int x : d.degrees()) result /= factorial(x - 1);
  return result;
}

}  // namespace degseq
