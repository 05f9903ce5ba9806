#include "degseq/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace degseq {

namespace {

struct EdgeList {
  // Lexicographic (i,j), i < j, 0-based endpoints.
  std::vector<std::pair<int, int>> edges;

  explicit EdgeList(int n) {
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
  }
};

void check_brute_force_size(const DegreeSequence& d, int max_vertices) {
  const int n = d.length();
  if (n > kBruteForceMaxVertices) {
    throw std::invalid_argument("brute force oracle: " + std::to_string(n) +
                                " vertices exceeds the hard ceiling of " +
                                std::to_string(kBruteForceMaxVertices) +
                                " (2^" + std::to_string(n * (n - 1) / 2) + " edge subsets)");
  }
  if (n > max_vertices) {
    throw std::invalid_argument("brute force oracle: " + std::to_string(n) +
                                " vertices exceeds the guard of " + std::to_string(max_vertices) +
                                "; raise max_vertices (ceiling " +
                                std::to_string(kBruteForceMaxVertices) + ") to allow this");
  }
}

template <typename Matches>
Count brute_force_scan(const DegreeSequence& d, int max_vertices, Matches&& matches) {
  check_brute_force_size(d, max_vertices);
  const int n = d.length();
  const EdgeList edge_list(n);
  const int num_edges = static_cast<int>(edge_list.edges.size());
  const long long sum = d.degree_sum();
  if (sum % 2 != 0) return 0;
  const unsigned wanted_edges = static_cast<unsigned>(sum / 2);

  Count total = 0;
  int deg[kBruteForceMaxVertices] = {};
  const std::uint64_t end_mask = 1ull << num_edges;
  for (std::uint64_t mask = 0; mask < end_mask; ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != wanted_edges) continue;
    std::fill(deg, deg + n, 0);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const auto [u, v] = edge_list.edges[std::countr_zero(bits)];
      ++deg[u];
      ++deg[v];
    }
    if (matches(std::span<const int>(deg, static_cast<std::size_t>(n)))) ++total;
  }
  return total;
}

}  // namespace

Count brute_force_count(const DegreeSequence& d, int max_vertices) {
  const auto& target = d.degrees();
  return brute_force_scan(d, max_vertices, [&](std::span<const int> deg) {
    return std::equal(deg.begin(), deg.end(), target.begin(), target.end());
  });
}

Count brute_force_multiset_count(const DegreeSequence& d, int max_vertices) {
  const auto& target = d.degrees();
  return brute_force_scan(d, max_vertices, [&](std::span<const int> deg) {
    int sorted[kBruteForceMaxVertices];
    std::copy(deg.begin(), deg.end(), sorted);
    std::sort(sorted, sorted + deg.size(), std::greater<>());
    return std::equal(sorted, sorted + deg.size(), target.begin(), target.end());
  });
}

Count mckay_count(const DegreeSequence& d, std::uint64_t term_budget) {
  const auto& target = d.degrees();
  const int n = d.length();

  std::uint64_t state_bound = 1;
  for (int x : target) {
    if (state_bound > term_budget / (static_cast<std::uint64_t>(x) + 1)) {
      throw std::invalid_argument(
          "generating polynomial oracle: prod(d_i + 1) exceeds the term budget of " +
          std::to_string(term_budget));
    }
    state_bound *= static_cast<std::uint64_t>(x) + 1;
  }

  // One DP pass per vertex pair (i,j), lexicographic: each factor
  // (1 + x_i x_j) either leaves a monomial alone or raises exponents i and
  // j by one. Anything that overshoots the target in a component is dead.
  DegreeVectorPoly poly;
  poly.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(state_bound, 1u << 20)));
  poly.emplace(std::vector<int>(n, 0), Count(1));
  std::vector<std::pair<std::vector<int>, Count>> raised;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      raised.clear();
      for (const auto& [exps, coeff] : poly) {
        if (exps[i] < target[i] && exps[j] < target[j]) {
          std::vector<int> up = exps;
          ++up[i];
          ++up[j];
          raised.emplace_back(std::move(up), coeff);
        }
      }
      for (auto& [exps, coeff] : raised) {
        poly[std::move(exps)] += coeff;
      }
    }
  }
  auto it = poly.find(target);
  return it == poly.end() ? Count(0) : it->second;
}

Count mckay_multiplication_count(int n) {
  if (n < 1) throw std::invalid_argument("mckay_multiplication_count: n must be >= 1");
  const long long num_factors = static_cast<long long>(n) * (n - 1) / 2;
  // sum_{k=1..F} 2^{k-1} = 2^F - 1 under the doubling model.
  return (Count(1) << num_factors) - 1;
}

}  // namespace degseq
