#pragma once

#include "degseq/bigint.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/enumeration.hpp"
#include "degseq/memo_cache.hpp"

namespace degseq {

// Closed-form family wrappers over count(). All take the caller's cache:
// sharing one cache across a whole table sweep is what makes the sweeps
// cheap, since the families keep regenerating the same subsequences.

// R(n,m): labeled m-regular graphs on n vertices, i.e. the constant
// sequence (m,...,m). Short-circuits to 0 when m >= n or both n and m are
// odd. Requires n >= 0 and m >= 1.
Count regular_count(int n, int m, MemoCache& cache, const CountOptions& options = {});

// T(k): labeled graphs with the degree sequence of a binary tree with k+1
// leaves, (3^{k-1}, 1^{k+1}). The binom(2k, k-1) factor converts the
// fixed-assignment count into the multiset count: with two distinct degree
// values, any k-1 of the 2k vertices may be the degree-3 ones. Requires
// k >= 1.
Count binary_tree_count(int k, MemoCache& cache, const CountOptions& options = {});

// Fixed-assignment count of the K_{n,m} degree sequence (m^n, n^m), with no
// correction factor. Requires 1 <= n <= m.
Count bipartite_count_raw(int n, int m, MemoCache& cache, const CountOptions& options = {});

// The published two-case formula: binom(n+m, n) * raw count when n != m,
// the raw count alone when n == m. Kept separate from bipartite_count_raw
// because the two readings disagree for n != m; table reproduction uses the
// raw variant.
Count bipartite_count_eq8(int n, int m, MemoCache& cache, const CountOptions& options = {});

// Moon's count of labeled *trees* realizing d as a fixed assignment: the
// multinomial (n-2)! / prod (d_i - 1)!. Returns 0 for any d whose sum is
// not 2(n-1), so it is total and composable in table sweeps. Trees are a
// subset of all realizing graphs, hence moon_tree_count(d) <= count(d).
Count moon_tree_count(const DegreeSequence& d);

}  // namespace degseq
