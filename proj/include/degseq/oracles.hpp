#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/degree_sequence.hpp"

namespace degseq {

// Two ground-truth counters, independent of the recurrence, used to
// cross-validate count(). Both are exact and deliberately unclever.

// 2^28 edge subsets is the practical ceiling for the exhaustive oracle.
inline constexpr int kBruteForceMaxVertices = 8;
inline constexpr int kBruteForceDefaultGuard = 7;

// Iterates every subset of the binom(n,2) possible edges (lexicographic
// (i,j) order, so runs are reproducible) and counts those whose degree
// vector equals d entry for entry. Throws std::invalid_argument when the
// sequence has more than max_vertices (or more than 8) vertices.
Count brute_force_count(const DegreeSequence& d, int max_vertices = kBruteForceDefaultGuard);

// Same iteration, but counts edge subsets whose sorted degree vector equals
// d — labeled graphs realizing d as a multiset rather than as a fixed
// assignment.
Count brute_force_multiset_count(const DegreeSequence& d,
                                 int max_vertices = kBruteForceDefaultGuard);

// Sparse DP state for the generating-polynomial oracle: coefficients of
// prod_{i<j} (1 + x_i x_j) indexed by exponent vector, restricted to
// vectors dominated componentwise by the target degrees. Stored values are
// always > 0.
using DegreeVectorPoly = std::unordered_map<std::vector<int>, Count, DegreeVectorHash>;

inline constexpr std::uint64_t kMcKayDefaultTermBudget = 10'000'000;

// Extracts the coefficient of x_1^{d_1} ... x_n^{d_n} from the generating
// polynomial prod_{i<j} (1 + x_i x_j) by DP over the vertex pairs. Exponent
// vectors exceeding d in any component can never reach the target and are
// dropped; that pruning is exact. Throws std::invalid_argument when
// prod (d_i + 1) exceeds term_budget.
Count mckay_count(const DegreeSequence& d, std::uint64_t term_budget = kMcKayDefaultTermBudget);

// Cost model for the naive, truncation-free expansion of the generating
// polynomial: factor k multiplies the 2^{k-1} terms accumulated so far, so
// the total is sum_{k=1..binom(n,2)} 2^{k-1} = 2^binom(n,2) - 1. This prices
// the naive expansion, not the pruned DP above; it exists for the
// complexity comparison in the bench report and is never executed.
Count mckay_multiplication_count(int n);

}  // namespace degseq
