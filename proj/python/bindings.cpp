// Python bindings for the degree-sequence counting library. Counts are
// arbitrary precision on both sides: C++ big integers map to Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/cache_io.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/enumeration.hpp"
#include "degseq/families.hpp"
#include "degseq/oracles.hpp"
#include "degseq/realizability.hpp"
#include "degseq/sequence_spec.hpp"

namespace py = pybind11;

namespace {

using degseq::Count;
using degseq::CountOptions;
using degseq::DegreeSequence;
using degseq::MemoCache;

py::int_ to_py_int(const Count& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

DegreeSequence make_sequence(std::vector<int> raw) {
  return degseq::canonicalize(std::move(raw));
}

CountOptions options_for(bool erdos_gallai_prune) {
  return CountOptions{.erdos_gallai_prune = erdos_gallai_prune};
}

// Functions that memoize accept an optional shared cache.
MemoCache& cache_or(MemoCache* cache, MemoCache& fallback) {
  return cache != nullptr ? *cache : fallback;
}

}  // namespace

PYBIND11_MODULE(_degseq, m) {
  m.doc() = "Exact counts of labeled simple graphs realizing a fixed degree sequence";
  m.attr("__version__") = "0.1.0";

  py::class_<MemoCache>(m, "MemoCache",
                        "Memo table from canonical degree sequences to exact counts; "
                        "share one across calls to reuse work. Not thread-safe.")
      .def(py::init<>())
      .def("__len__", &MemoCache::size)
      .def("clear", &MemoCache::clear)
      .def(
          "stats",
          [](const MemoCache& cache) {
            const auto& s = cache.stats();
            py::dict d;
            d["leaves"] = to_py_int(s.leaves);
            d["calls"] = s.calls;
            d["cache_hits"] = s.cache_hits;
            d["cache_misses"] = s.cache_misses;
            return d;
          },
          "Counters accumulated over every run that used this cache.")
      .def(
          "save", [](const MemoCache& cache, const std::string& path) {
            degseq::save_cache(cache, path);
          },
          py::arg("path"), "Persist all entries to a versioned cache file.")
      .def_static(
          "load", [](const std::string& path) { return degseq::load_cache(path); },
          py::arg("path"), "Load a cache file saved by save().");

  m.def(
      "canonicalize",
      [](std::vector<int> degrees) { return make_sequence(std::move(degrees)).degrees(); },
      py::arg("degrees"),
      "Sort non-increasing and strip zeros; raises ValueError on negatives.");

  m.def(
      "count",
      [](std::vector<int> degrees, MemoCache* cache, bool erdos_gallai_prune) {
        MemoCache local;
        return to_py_int(degseq::count(make_sequence(std::move(degrees)),
                                       cache_or(cache, local),
                                       options_for(erdos_gallai_prune)));
      },
      py::arg("degrees"), py::arg("cache") = nullptr, py::arg("erdos_gallai_prune") = false,
      "Number of labeled simple graphs in which vertex i has degree d_i exactly.");

  m.def(
      "count_leaves",
      [](std::vector<int> degrees) {
        return to_py_int(degseq::count_leaves(make_sequence(std::move(degrees))));
      },
      py::arg("degrees"),
      "Leaves of the bare recursion tree; the walk costs as much as the answer.");

  m.def(
      "erdos_gallai",
      [](std::vector<int> degrees) {
        return degseq::erdos_gallai(make_sequence(std::move(degrees)));
      },
      py::arg("degrees"));
  m.def(
      "havel_hakimi",
      [](std::vector<int> degrees) {
        return degseq::havel_hakimi(make_sequence(std::move(degrees)));
      },
      py::arg("degrees"));

  m.def(
      "brute_force_count",
      [](std::vector<int> degrees, int max_vertices) {
        return to_py_int(
            degseq::brute_force_count(make_sequence(std::move(degrees)), max_vertices));
      },
      py::arg("degrees"), py::arg("max_vertices") = degseq::kBruteForceDefaultGuard,
      "Exhaustive edge-subset oracle (fixed assignment); refuses past the guard.");
  m.def(
      "brute_force_multiset_count",
      [](std::vector<int> degrees, int max_vertices) {
        return to_py_int(
            degseq::brute_force_multiset_count(make_sequence(std::move(degrees)), max_vertices));
      },
      py::arg("degrees"), py::arg("max_vertices") = degseq::kBruteForceDefaultGuard,
      "Exhaustive oracle counting realizations of d as a degree multiset.");
  m.def(
      "mckay_count",
      [](std::vector<int> degrees, std::uint64_t term_budget) {
        return to_py_int(degseq::mckay_count(make_sequence(std::move(degrees)), term_budget));
      },
      py::arg("degrees"), py::arg("term_budget") = degseq::kMcKayDefaultTermBudget,
      "Generating-polynomial oracle: coefficient of x^d in prod (1 + x_i x_j).");
  m.def(
      "mckay_multiplication_count",
      [](int n) { return to_py_int(degseq::mckay_multiplication_count(n)); }, py::arg("n"),
      "Multiplications a naive full expansion of the generating polynomial would do.");

  m.def(
      "regular_count",
      [](int n, int m_degree, MemoCache* cache, bool erdos_gallai_prune) {
        MemoCache local;
        return to_py_int(degseq::regular_count(n, m_degree, cache_or(cache, local),
                                               options_for(erdos_gallai_prune)));
      },
      py::arg("n"), py::arg("m"), py::arg("cache") = nullptr,
      py::arg("erdos_gallai_prune") = false, "Labeled m-regular graphs on n vertices.");
  m.def(
      "binary_tree_count",
      [](int k, MemoCache* cache, bool erdos_gallai_prune) {
        MemoCache local;
        return to_py_int(degseq::binary_tree_count(k, cache_or(cache, local),
                                                   options_for(erdos_gallai_prune)));
      },
      py::arg("k"), py::arg("cache") = nullptr, py::arg("erdos_gallai_prune") = false,
      "Labeled graphs sharing the degree sequence of a binary tree with k+1 leaves.");
  m.def(
      "bipartite_count_raw",
      [](int n, int m_size, MemoCache* cache, bool erdos_gallai_prune) {
        MemoCache local;
        return to_py_int(degseq::bipartite_count_raw(n, m_size, cache_or(cache, local),
                                                     options_for(erdos_gallai_prune)));
      },
      py::arg("n"), py::arg("m"), py::arg("cache") = nullptr,
      py::arg("erdos_gallai_prune") = false,
      "Fixed-assignment count of the K_{n,m} degree sequence (1 <= n <= m).");
  m.def(
      "bipartite_count_eq8",
      [](int n, int m_size, MemoCache* cache, bool erdos_gallai_prune) {
        MemoCache local;
        return to_py_int(degseq::bipartite_count_eq8(n, m_size, cache_or(cache, local),
                                                     options_for(erdos_gallai_prune)));
      },
      py::arg("n"), py::arg("m"), py::arg("cache") = nullptr,
      py::arg("erdos_gallai_prune") = false,
      "The two-case corrected variant: binom(n+m,n) times the raw count when n != m.");
  m.def(
      "moon_tree_count",
      [](std::vector<int> degrees) {
        return to_py_int(degseq::moon_tree_count(make_sequence(std::move(degrees))));
      },
      py::arg("degrees"),
      "Labeled trees realizing d as a fixed assignment; 0 for non-tree degree sums.");

  m.def(
      "parse_sequence_spec",
      [](const std::string& text) { return degseq::parse_sequence_spec(text); },
      py::arg("text"), "Expand the CLI shorthand, e.g. '3^4,1^5'.");
}
