#include "degseq/bigint.hpp"

#include <stdexcept>

namespace degseq {

Count binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (n - k < k) k = n - k;
  Count result = 1;
  // result stays integral at every step: after the i-th iteration it holds
  // binom(n-k+i, i) exactly.
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Count result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace degseq
