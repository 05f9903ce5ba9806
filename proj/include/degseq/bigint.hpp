#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace degseq {

// Exact nonnegative count. Results routinely exceed 64 bits (the regular
// table alone reaches 1872726690127181663775), so every counting path is
// arbitrary precision end to end; no floating point anywhere.
using Count = boost::multiprecision::cpp_int;

// Exact binomial coefficient; 0 when k < 0 or k > n.
Count binomial(long long n, long long k);

// Exact n!; n must be >= 0.
Count factorial(long long n);

}  // namespace degseq
