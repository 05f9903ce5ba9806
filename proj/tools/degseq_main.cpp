// degseq: exact counts of labeled simple graphs realizing a degree sequence.
//
// Subcommands: count, check, table, verify, bench, cache export/import.
// Exit codes: 0 success (check: realizable), 3 check: not realizable,
// 2 usage error, 1 internal failure / guard refusal / verification mismatch.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degseq/bigint.hpp"
#include "degseq/cache_io.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/enumeration.hpp"
#include "degseq/families.hpp"
#include "degseq/oracles.hpp"
#include "degseq/realizability.hpp"
#include "degseq/sequence_spec.hpp"

namespace {

using degseq::Count;
using degseq::CountOptions;
using degseq::DegreeSequence;
using degseq::MemoCache;

// Bad command-line input, as opposed to a failure while working.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range_arg(const std::string& text, const char* name) {
  try {
    return degseq::parse_int_range(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad ") + name + " range '" + text + "': " + e.what());
  }
}

DegreeSequence parse_sequence_arg(const std::string& text) {
  try {
    return degseq::canonicalize(degseq::parse_sequence_spec(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad degree sequence '" + text + "': " + e.what());
  }
}

// Shared --cache handling: load lazily, save on success.
struct PersistentCache {
  std::string path;
  MemoCache cache;

  void load() {
    if (!path.empty() && std::filesystem::exists(path)) {
      cache = degseq::load_cache(path);
    }
  }
  void save() {
    if (!path.empty()) degseq::save_cache(cache, path);
  }
};

struct StatsSnapshot {
  degseq::RecursionStats before;

  explicit StatsSnapshot(const MemoCache& cache) : before(cache.stats()) {}

  void print(const MemoCache& cache, std::ostream& err) const {
    const auto& s = cache.stats();
    const std::uint64_t calls = s.calls - before.calls;
    const std::uint64_t hits = s.cache_hits - before.cache_hits;
    const std::uint64_t misses = s.cache_misses - before.cache_misses;
    const Count leaves = s.leaves - before.leaves;
    err << "stats: leaves=" << leaves << " calls=" << calls << " cache_hits=" << hits
        << " cache_misses=" << misses;
    if (calls > 0) {
      err << " hit_rate=" << std::fixed << std::setprecision(1)
          << (100.0 * static_cast<double>(hits) / static_cast<double>(calls)) << '%';
    }
    err << " cache_size=" << cache.size() << '\n';
  }
};

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
      stream = &file;
    }
  }
  std::ostream& out() { return *stream; }
};

// ---------------------------------------------------------------- count ---

struct CountArgs {
  std::string spec;
  std::string file;
  std::string cache_path;
  bool stats = false;
  bool no_prune = false;
};

int run_count(const CountArgs& args) {
  std::vector<std::string> specs;
  if (!args.spec.empty() && !args.file.empty()) {
    throw UsageError("give either a sequence spec or --file, not both");
  }
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw std::runtime_error("cannot open sequence file: " + args.file);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) specs.push_back(line);
    }
  } else if (!args.spec.empty()) {
    specs.push_back(args.spec);
  } else {
    throw UsageError("missing degree sequence (or --file)");
  }

  PersistentCache persistent{.path = args.cache_path, .cache = {}};
  persistent.load();
  const CountOptions options{.erdos_gallai_prune = !args.no_prune};
  for (const auto& text : specs) {
    const DegreeSequence d = parse_sequence_arg(text);
    const StatsSnapshot snapshot(persistent.cache);
    std::cout << degseq::count(d, persistent.cache, options) << '\n';
    if (args.stats) snapshot.print(persistent.cache, std::cerr);
  }
  persistent.save();
  return 0;
}

// ---------------------------------------------------------------- check ---

int run_check(const std::string& spec) {
  const DegreeSequence d = parse_sequence_arg(spec);
  const bool eg = degseq::erdos_gallai(d);
  const bool hh = degseq::havel_hakimi(d);
  if (eg != hh) {
    std::cerr << "internal error: realizability tests disagree on (" << d.to_string()
              << "): erdos-gallai=" << eg << " havel-hakimi=" << hh << '\n';
    return 1;
  }
  std::cout << (eg ? "realizable" : "not realizable") << '\n';
  return eg ? 0 : 3;
}

// ---------------------------------------------------------------- table ---

struct TableArgs {
  std::string family;
  std::string n_range;
  std::string m_range;
  std::string k_range;
  std::string format = "csv";
  std::string out_path;
  std::string cache_path;
  bool eq8 = false;
  bool no_prune = false;
  double time_budget_s = 0.0;
};

class Deadline {
 public:
  explicit Deadline(double seconds) {
    if (seconds > 0.0) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds));
    }
  }
  bool exceeded() const {
    return deadline_ && std::chrono::steady_clock::now() > *deadline_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

int run_table(const TableArgs& args) {
  const CountOptions options{.erdos_gallai_prune = !args.no_prune};
  PersistentCache persistent{.path = args.cache_path, .cache = {}};
  persistent.load();
  MemoCache& cache = persistent.cache;
  const Deadline deadline(args.time_budget_s);
  const bool json = args.format == "json";
  OutputTarget target(args.out_path);
  std::ostream& out = target.out();

  nlohmann::ordered_json doc;
  bool truncated = false;

  // One shared cache per sweep: families keep regenerating the same
  // subsequences, so later cells are mostly lookups.
  if (args.family == "regular") {
    if (args.n_range.empty() || args.m_range.empty()) {
      throw UsageError("table regular needs --n and --m");
    }
    const auto [n_lo, n_hi] = parse_range_arg(args.n_range, "--n");
    const auto [m_lo, m_hi] = parse_range_arg(args.m_range, "--m");
    if (m_lo < 1) throw UsageError("table regular needs m >= 1");
    if (!json) out << "n,m,count\n";
    doc = {{"family", "regular"}, {"rows", nlohmann::ordered_json::array()}};
    for (int n = n_lo; n <= n_hi && !truncated; ++n) {
      for (int m = m_lo; m <= m_hi; ++m) {
        if (deadline.exceeded()) {
          truncated = true;
          break;
        }
        const Count c = degseq::regular_count(n, m, cache, options);
        if (json) {
          doc["rows"].push_back({{"n", n}, {"m", m}, {"count", c.str()}});
        } else {
          out << n << ',' << m << ',' << c << '\n';
        }
      }
    }
  } else if (args.family == "tree") {
    if (args.k_range.empty()) throw UsageError("table tree needs --k");
    const auto [k_lo, k_hi] = parse_range_arg(args.k_range, "--k");
    if (k_lo < 1) throw UsageError("table tree needs k >= 1");
    if (!json) out << "k,count\n";
    doc = {{"family", "tree"}, {"rows", nlohmann::ordered_json::array()}};
    for (int k = k_lo; k <= k_hi; ++k) {
      if (deadline.exceeded()) {
        truncated = true;
        break;
      }
      const Count c = degseq::binary_tree_count(k, cache, options);
      if (json) {
        doc["rows"].push_back({{"k", k}, {"count", c.str()}});
      } else {
        out << k << ',' << c << '\n';
      }
    }
  } else if (args.family == "bipartite") {
    if (args.n_range.empty() || args.m_range.empty()) {
      throw UsageError("table bipartite needs --n and --m");
    }
    const auto [n_lo, n_hi] = parse_range_arg(args.n_range, "--n");
    const auto [m_lo, m_hi] = parse_range_arg(args.m_range, "--m");
    if (n_lo < 1 || m_lo < 1) throw UsageError("table bipartite needs n, m >= 1");
    if (!json) out << "m,n,count\n";
    doc = {{"family", "bipartite"},
           {"variant", args.eq8 ? "eq8" : "raw"},
           {"rows", nlohmann::ordered_json::array()}};
    for (int m = m_lo; m <= m_hi && !truncated; ++m) {
      for (int n = n_lo; n <= std::min(n_hi, m); ++n) {
        if (deadline.exceeded()) {
          truncated = true;
          break;
        }
        const Count c = args.eq8 ? degseq::bipartite_count_eq8(n, m, cache, options)
                                 : degseq::bipartite_count_raw(n, m, cache, options);
        if (json) {
          doc["rows"].push_back({{"m", m}, {"n", n}, {"count", c.str()}});
        } else {
          out << m << ',' << n << ',' << c << '\n';
        }
      }
    }
  } else {
    throw UsageError("unknown table family '" + args.family + "' (regular|tree|bipartite)");
  }

  if (json) out << doc.dump(2) << '\n';
  out.flush();
  if (truncated) {
    std::cerr << "time budget exceeded; output is partial\n";
    return 1;
  }
  persistent.save();
  return 0;
}

// --------------------------------------------------------------- verify ---

struct VerifyArgs {
  int nmax = 7;
  int dmax = 5;
  std::uint64_t mckay_budget = degseq::kMcKayDefaultTermBudget;
  bool force = false;
  bool no_prune = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.nmax < 0 || args.dmax < 0) throw UsageError("verify: nmax and dmax must be >= 0");
  if (args.nmax > degseq::kBruteForceMaxVertices) {
    throw UsageError("verify: nmax cannot exceed " +
                     std::to_string(degseq::kBruteForceMaxVertices));
  }
  if (args.nmax > degseq::kBruteForceDefaultGuard && !args.force) {
    throw UsageError("verify: nmax above " +
                     std::to_string(degseq::kBruteForceDefaultGuard) +
                     " iterates 2^28 edge subsets per sequence; pass --force to allow");
  }

  const CountOptions options{.erdos_gallai_prune = !args.no_prune};
  MemoCache cache;
  std::vector<std::uint64_t> per_length(args.nmax + 1, 0);
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;

  std::vector<int> seq;
  auto visit = [&](const DegreeSequence& d) {
    const Count via_recurrence = degseq::count(d, cache, options);
    const Count via_brute = degseq::brute_force_count(d, args.nmax);
    const Count via_poly = degseq::mckay_count(d, args.mckay_budget);
    ++checked;
    ++per_length[d.length()];
    if (via_recurrence != via_brute || via_recurrence != via_poly) {
      ++mismatches;
      std::cout << "MISMATCH (" << d.to_string() << "): recurrence=" << via_recurrence
                << " brute_force=" << via_brute << " generating_poly=" << via_poly << '\n';
    }
  };
  auto rec = [&](auto&& self, int max_next) -> void {
    visit(DegreeSequence::from_canonical(seq));
    if (static_cast<int>(seq.size()) == args.nmax) return;
    for (int v = max_next; v >= 1; --v) {
      seq.push_back(v);
      self(self, v);
      seq.pop_back();
    }
  };
  rec(rec, args.dmax);

  for (int n = 0; n <= args.nmax; ++n) {
    std::cout << "n=" << n << ": " << per_length[n] << " sequences, "
              << (mismatches == 0 ? "all agree" : "see mismatches above") << '\n';
  }
  if (mismatches > 0) {
    std::cout << mismatches << " of " << checked << " sequences disagree\n";
    return 1;
  }
  std::cout << "all " << checked << " sequences agree\n";
  return 0;
}

// ---------------------------------------------------------------- bench ---

struct BenchArgs {
  std::string family;
  std::string n_range;
  std::string m_range;
  std::string k_range;
  std::string out_path;
  std::uint64_t leaf_budget = 100'000'000;
  bool no_prune = false;
};

struct BenchRow {
  std::string leaves = "skipped";
  std::uint64_t cache_misses = 0;
  double wall_ms = 0.0;
  Count mckay_mults;
};

BenchRow bench_sequence(const DegreeSequence& d, int vertices, std::uint64_t leaf_budget,
                        const CountOptions& options) {
  BenchRow row;
  if (auto leaves = degseq::count_leaves_within(d, leaf_budget)) {
    row.leaves = leaves->str();
  }
  MemoCache cache;  // fresh per row so the miss tally is row-local
  const auto start = std::chrono::steady_clock::now();
  degseq::count(d, cache, options);
  const auto stop = std::chrono::steady_clock::now();
  row.cache_misses = cache.stats().cache_misses;
  row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  row.mckay_mults = degseq::mckay_multiplication_count(std::max(vertices, 1));
  return row;
}

void write_bench_row(std::ostream& out, const BenchRow& row) {
  out << row.leaves << ',' << row.cache_misses << ',' << std::fixed << std::setprecision(3)
      << row.wall_ms << ',' << row.mckay_mults << '\n';
}

int run_bench(const BenchArgs& args) {
  const CountOptions options{.erdos_gallai_prune = !args.no_prune};
  OutputTarget target(args.out_path);
  std::ostream& out = target.out();

  if (args.family == "regular") {
    if (args.n_range.empty() || args.m_range.empty()) {
      throw UsageError("bench regular needs --n and --m");
    }
    const auto [n_lo, n_hi] = parse_range_arg(args.n_range, "--n");
    const auto [m_lo, m_hi] = parse_range_arg(args.m_range, "--m");
    if (m_lo < 1) throw UsageError("bench regular needs m >= 1");
    out << "n,m,leaves,cache_misses,wall_ms,mckay_multiplications\n";
    for (int n = n_lo; n <= n_hi; ++n) {
      for (int m = m_lo; m <= m_hi; ++m) {
        const auto d = DegreeSequence::from_canonical(std::vector<int>(n, m));
        const BenchRow row = bench_sequence(d, n, args.leaf_budget, options);
        out << n << ',' << m << ',';
        write_bench_row(out, row);
      }
    }
  } else if (args.family == "tree") {
    if (args.k_range.empty()) throw UsageError("bench tree needs --k");
    const auto [k_lo, k_hi] = parse_range_arg(args.k_range, "--k");
    if (k_lo < 1) throw UsageError("bench tree needs k >= 1");
    out << "k,leaves,cache_misses,wall_ms,mckay_multiplications\n";
    for (int k = k_lo; k <= k_hi; ++k) {
      std::vector<int> degrees(2 * k, 1);
      std::fill(degrees.begin(), degrees.begin() + (k - 1), 3);
      const auto d = DegreeSequence::from_canonical(std::move(degrees));
      const BenchRow row = bench_sequence(d, 2 * k, args.leaf_budget, options);
      out << k << ',';
      write_bench_row(out, row);
    }
  } else if (args.family == "bipartite") {
    if (args.n_range.empty() || args.m_range.empty()) {
      throw UsageError("bench bipartite needs --n and --m");
    }
    const auto [n_lo, n_hi] = parse_range_arg(args.n_range, "--n");
    const auto [m_lo, m_hi] = parse_range_arg(args.m_range, "--m");
    if (n_lo < 1 || m_lo < 1) throw UsageError("bench bipartite needs n, m >= 1");
    out << "m,n,leaves,cache_misses,wall_ms,mckay_multiplications\n";
    for (int m = m_lo; m <= m_hi; ++m) {
      for (int n = n_lo; n <= std::min(n_hi, m); ++n) {
        std::vector<int> degrees(n + m, n);
        std::fill(degrees.begin(), degrees.begin() + n, m);
        const auto d = DegreeSequence::from_canonical(std::move(degrees));
        const BenchRow row = bench_sequence(d, n + m, args.leaf_budget, options);
        out << m << ',' << n << ',';
        write_bench_row(out, row);
      }
    }
  } else {
    throw UsageError("unknown bench family '" + args.family + "' (regular|tree|bipartite)");
  }
  out.flush();
  return 0;
}

// ---------------------------------------------------------------- cache ---

int run_cache_export(const std::string& cache_path, const std::string& out_path) {
  const MemoCache cache = degseq::load_cache(cache_path);
  OutputTarget target(out_path);
  degseq::write_cache(cache, target.out());
  target.out().flush();
  return 0;
}

int run_cache_import(const std::string& cache_path, const std::string& from_path) {
  MemoCache into;
  if (std::filesystem::exists(cache_path)) into = degseq::load_cache(cache_path);
  const MemoCache from = degseq::load_cache(from_path);
  const std::size_t added = degseq::merge_cache(into, from);
  degseq::save_cache(into, cache_path);
  std::cout << "imported " << added << " new records (" << into.size() << " total)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counts of labeled simple graphs realizing a fixed degree sequence"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* cmd_count = app.add_subcommand(
      "count", "count the labeled graphs realizing a sequence (e.g. 3^4,1^5)");
  cmd_count->add_option("spec", count_args.spec, "degree sequence, INT or INT^INT terms");
  cmd_count->add_option("--file", count_args.file, "read one sequence spec per line");
  cmd_count->add_option("--cache", count_args.cache_path, "persistent memo cache file");
  cmd_count->add_flag("--stats", count_args.stats, "print run counters to stderr");
  cmd_count->add_flag("--no-prune", count_args.no_prune,
                      "disable the Erdős–Gallai pre-check (bare recurrence)");

  std::string check_spec;
  auto* cmd_check = app.add_subcommand("check", "decide realizability (exit 0 yes, 3 no)");
  cmd_check->add_option("spec", check_spec, "degree sequence")->required();

  TableArgs table_args;
  auto* cmd_table = app.add_subcommand("table", "sweep a family and emit a table");
  cmd_table->add_option("family", table_args.family, "regular | tree | bipartite")->required();
  cmd_table->add_option("--n", table_args.n_range, "vertex range LO..HI");
  cmd_table->add_option("--m", table_args.m_range, "degree range LO..HI");
  cmd_table->add_option("--k", table_args.k_range, "tree size range LO..HI");
  cmd_table->add_option("--format", table_args.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_table->add_option("--out", table_args.out_path, "write to a file instead of stdout");
  cmd_table->add_option("--cache", table_args.cache_path, "persistent memo cache file");
  cmd_table->add_flag("--eq8", table_args.eq8,
                      "bipartite only: apply the binom(n+m,n) correction factor");
  cmd_table->add_flag("--no-prune", table_args.no_prune, "disable the Erdős–Gallai pre-check");
  cmd_table->add_option("--time-budget", table_args.time_budget_s,
                        "stop after SECONDS, emitting a partial table (exit 1)");

  VerifyArgs verify_args;
  auto* cmd_verify = app.add_subcommand(
      "verify", "cross-check the recurrence against both oracles, exhaustively");
  cmd_verify->add_option("--nmax", verify_args.nmax, "max sequence length (default 7)");
  cmd_verify->add_option("--dmax", verify_args.dmax, "max degree (default 5)");
  cmd_verify->add_option("--mckay-budget", verify_args.mckay_budget,
                         "term budget for the generating-polynomial oracle");
  cmd_verify->add_flag("--force", verify_args.force, "allow nmax of 8");
  cmd_verify->add_flag("--no-prune", verify_args.no_prune,
                       "disable the Erdős–Gallai pre-check");

  BenchArgs bench_args;
  auto* cmd_bench = app.add_subcommand(
      "bench", "per-row leaf counts, cache misses, wall time, and the naive-expansion cost");
  cmd_bench->add_option("family", bench_args.family, "regular | tree | bipartite")->required();
  cmd_bench->add_option("--n", bench_args.n_range, "vertex range LO..HI");
  cmd_bench->add_option("--m", bench_args.m_range, "degree range LO..HI");
  cmd_bench->add_option("--k", bench_args.k_range, "tree size range LO..HI");
  cmd_bench->add_option("--leaf-budget", bench_args.leaf_budget,
                        "mark rows 'skipped' past this many leaves (default 1e8)");
  cmd_bench->add_option("--out", bench_args.out_path, "write to a file instead of stdout");
  cmd_bench->add_flag("--no-prune", bench_args.no_prune, "disable the Erdős–Gallai pre-check");

  auto* cmd_cache = app.add_subcommand("cache", "inspect and merge persistent cache files");
  cmd_cache->require_subcommand(1);
  std::string export_cache_path;
  std::string export_out_path;
  auto* cmd_export = cmd_cache->add_subcommand(
      "export", "validate a cache file and rewrite it canonically");
  cmd_export->add_option("--cache", export_cache_path, "cache file to read")->required();
  cmd_export->add_option("--out", export_out_path, "write to a file instead of stdout");
  std::string import_cache_path;
  std::string import_from_path;
  auto* cmd_import =
      cmd_cache->add_subcommand("import", "merge another cache file's records");
  cmd_import->add_option("--cache", import_cache_path, "cache file to update")->required();
  cmd_import->add_option("--from", import_from_path, "cache file to merge in")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_count->parsed()) return run_count(count_args);
    if (cmd_check->parsed()) return run_check(check_spec);
    if (cmd_table->parsed()) return run_table(table_args);
    if (cmd_verify->parsed()) return run_verify(verify_args);
    if (cmd_bench->parsed()) return run_bench(bench_args);
    if (cmd_cache->parsed()) {
      if (cmd_export->parsed()) return run_cache_export(export_cache_path, export_out_path);
      if (cmd_import->parsed()) return run_cache_import(import_cache_path, import_from_path);
    }
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
