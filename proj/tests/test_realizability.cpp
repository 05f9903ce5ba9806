#include <vector>

#include "degseq/enumeration.hpp"
#include "degseq/realizability.hpp"
#include "doctest.h"

using degseq::canonicalize;
using degseq::DegreeSequence;
using degseq::erdos_gallai;
using degseq::havel_hakimi;

namespace {

template <typename F>
void for_each_canonical(int max_len, int max_degree, F&& f) {
  std::vector<int> seq;
  auto rec = [&](auto&& self, int max_next) -> void {
    f(DegreeSequence::from_canonical(seq));
    if (static_cast<int>(seq.size()) == max_len) return;
    for (int v = max_next; v >= 1; --v) {
      seq.push_back(v);
      self(self, v);
      seq.pop_back();
    }
  };
  rec(rec, max_degree);
}

}  // namespace

TEST_CASE("erdos-gallai: pinned decisions") {
  CHECK(erdos_gallai(DegreeSequence{}));
  CHECK(erdos_gallai(canonicalize({1, 1})));
  CHECK_FALSE(erdos_gallai(canonicalize({3, 1, 1})));
  CHECK(erdos_gallai(canonicalize({2, 2, 2, 2})));
  CHECK_FALSE(erdos_gallai(canonicalize({1})));
  CHECK_FALSE(erdos_gallai(canonicalize({2, 1})));  // odd sum
}

TEST_CASE("havel-hakimi: pinned decisions") {
  CHECK(havel_hakimi(DegreeSequence{}));
  CHECK(havel_hakimi(canonicalize({2, 2, 2})));
  // stars: K_{1,5} on 6 vertices and K_{1,6} on 7
  CHECK(havel_hakimi(canonicalize({5, 1, 1, 1, 1, 1})));
  CHECK(havel_hakimi(canonicalize({6, 1, 1, 1, 1, 1, 1})));
  CHECK_FALSE(havel_hakimi(canonicalize({4, 4, 4, 1, 1})));
  CHECK_FALSE(havel_hakimi(canonicalize({3, 1})));
}

TEST_CASE("the two tests agree on every canonical sequence with n <= 6, d_i <= 5") {
  for_each_canonical(6, 5, [](const DegreeSequence& d) {
    CHECK(erdos_gallai(d) == havel_hakimi(d));
  });
}

TEST_CASE("realizable iff count > 0, exhaustively for n <= 5") {
  degseq::MemoCache cache;
  for_each_canonical(5, 4, [&](const DegreeSequence& d) {
    CHECK(erdos_gallai(d) == (degseq::count(d, cache) > 0));
  });
}
