#include "degseq/degree_sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace degseq {

DegreeSequence DegreeSequence::from_raw(std::vector<int> raw) {
  for (int x : raw) {
    if (x < 0) throw std::invalid_argument("degree sequence: negative entry");
  }
  std::sort(raw.begin(), raw.end(), std::greater<>());
  while (!raw.empty() && raw.back() == 0) raw.pop_back();
  return DegreeSequence(std::move(raw));
}

DegreeSequence DegreeSequence::from_canonical(std::vector<int> canonical) {
  if (!is_canonical(canonical)) {
    throw std::invalid_argument("degree sequence: not in canonical form");
  }
  return DegreeSequence(std::move(canonical));
}

long long DegreeSequence::degree_sum() const noexcept {
  long long sum = 0;
  for (int x : degrees_) sum += x;
  return sum;
}

std::string DegreeSequence::to_string() const {
  std::string text;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i > 0) text += ',';
    text += std::to_string(degrees_[i]);
  }
  return text;
}

DegreeSequence canonicalize(std::vector<int> raw) {
  return DegreeSequence::from_raw(std::move(raw));
}

bool is_canonical(std::span<const int> degrees) noexcept {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) return false;
    if (i > 0 && degrees[i] > degrees[i - 1]) return false;
  }
  return true;
}

DegreeSequence reduce(const DegreeSequence& d, std::span<const int> positions) {
  const int n = d.length();
  if (n < 1) throw std::invalid_argument("reduce: empty sequence");
  if (static_cast<int>(positions.size()) != d.min_degree()) {
    throw std::invalid_argument("reduce: |S| must equal the last degree");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > n - 1) {
      throw std::invalid_argument("reduce: position out of range 1..n-1");
    }
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw std::invalid_argument("reduce: positions must be strictly increasing");
    }
  }
  std::vector<int> out;
  detail::reduce_into(d.degrees(), positions, out);
  return DegreeSequence::from_canonical(std::move(out));
}

std::size_t DegreeVectorHash::operator()(const std::vector<int>& v) const noexcept {
  // splitmix64 step per entry; keys are short, this dominates nothing.
  std::uint64_t h = 0x9e3779b97f4a7c15ull + v.size();
  for (int x : v) {
    std::uint64_t z = h + 0x9e3779b97f4a7c15ull + static_cast<std::uint32_t>(x);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

namespace detail {

void reduce_into(std::span<const int> degrees, std::span<const int> positions,
                 std::vector<int>& out) {
  const int n = static_cast<int>(degrees.size());
  // The surviving entries split into two streams that are each already
  // non-increasing: untouched entries and decremented entries. Merging them
  // re-canonicalizes in O(n) with no sort. Zeros can only come from
  // decremented 1s, which sit at the tail of their stream.
  static thread_local std::vector<int> kept;
  static thread_local std::vector<int> dec;
  kept.clear();
  dec.clear();
  std::size_t p = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (p < positions.size() && positions[p] == i + 1) {
      dec.push_back(degrees[i] - 1);
      ++p;
    } else {
      kept.push_back(degrees[i]);
    }
  }
  out.clear();
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < kept.size() && b < dec.size()) {
    if (kept[a] >= dec[b]) {
      out.push_back(kept[a++]);
    } else {
      out.push_back(dec[b++]);
    }
  }
  while (a < kept.size()) out.push_back(kept[a++]);
  for (; b < dec.size(); ++b) {
    if (dec[b] > 0) out.push_back(dec[b]);
  }
}

}  // namespace detail

}  // namespace degseq
