#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace degseq {

// Parses the degree-sequence shorthand: comma-separated terms, each either
// INT or INT^INT (value, multiplicity). "3^4,1^5" expands to four 3s and
// five 1s. Values must be >= 0 (zeros are stripped later by
// canonicalization). Throws std::invalid_argument on anything else, or when
// the expansion would exceed max_length.
std::vector<int> parse_sequence_spec(std::string_view text, std::size_t max_length = 1'000'000);

// Parses "LO..HI" or a single "N" (meaning N..N) into an inclusive range of
// nonnegative ints with LO <= HI. Throws std::invalid_argument otherwise.
std::pair<int, int> parse_int_range(std::string_view text);

}  // namespace degseq
