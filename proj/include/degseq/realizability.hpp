#pragma once

#include <span>

#include "degseq/degree_sequence.hpp"

namespace degseq {

// Erdős–Gallai test: d is realizable iff its sum is even and for every
// k in 1..n:  sum_{i<=k} d_i  <=  k(k-1) + sum_{i>k} min(d_i, k).
bool erdos_gallai(const DegreeSequence& d);

// Havel–Hakimi test: repeatedly connect the highest-degree vertex to the
// next d_1 vertices and re-sort; realizable iff the process empties the
// sequence. Full re-sort each round; inputs here are tiny next to the
// counting work.
bool havel_hakimi(const DegreeSequence& d);

namespace detail {

// Span variants for hot paths; `degrees` must be canonical.
bool erdos_gallai(std::span<const int> degrees);
bool havel_hakimi(std::span<const int> degrees);

}  // namespace detail

}  // namespace degseq
