#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace degseq {

// A degree sequence in canonical form: entries sorted non-increasing, every
// entry >= 1. The empty sequence is valid and is realized by exactly one
// graph (the graph on zero vertices). Zeros in raw input are stripped at
// construction; an isolated vertex never changes a fixed-assignment count.
class DegreeSequence {
 public:
  DegreeSequence() = default;  // the empty sequence

  // Sorts non-increasing and strips zeros. Throws std::invalid_argument on
  // a negative entry.
  static DegreeSequence from_raw(std::vector<int> raw);

  // Adopts a vector that must already be canonical; throws otherwise.
  static DegreeSequence from_canonical(std::vector<int> canonical);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int length() const noexcept { return static_cast<int>(degrees_.size()); }
  bool empty() const noexcept { return degrees_.empty(); }
  long long degree_sum() const noexcept;
  int max_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.front(); }
  int min_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.back(); }

  // Comma-separated decimal entries, e.g. "3,2,1"; empty string for the
  // empty sequence. This is the cache-file key format.
  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  explicit DegreeSequence(std::vector<int> canonical) : degrees_(std::move(canonical)) {}
  std::vector<int> degrees_;
};

// Spec name for DegreeSequence::from_raw.
DegreeSequence canonicalize(std::vector<int> raw);

bool is_canonical(std::span<const int> degrees) noexcept;

// The reduction d/S: drop the last vertex, subtract 1 at each listed
// position (1-based, strictly increasing, all in 1..n-1, exactly
// min_degree() of them), then re-canonicalize. Throws std::invalid_argument
// on a malformed position set or when d is empty.
DegreeSequence reduce(const DegreeSequence& d, std::span<const int> positions);

// Hash over the entries of a canonical degree vector.
struct DegreeVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

namespace detail {

// Unchecked fast path behind reduce(): writes the canonical reduced
// sequence into out without allocating (out's capacity is reused). The
// caller guarantees the contract documented on reduce().
void reduce_into(std::span<const int> degrees, std::span<const int> positions,
                 std::vector<int>& out);

}  // namespace detail

}  // namespace degseq
