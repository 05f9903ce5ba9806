#include "degseq/cache_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "degseq/degree_sequence.hpp"

namespace degseq {

namespace {

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& what) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::vector<int> parse_key(std::string_view text, const std::string& source, std::size_t line) {
  std::vector<int> degrees;
  if (text.empty()) return degrees;  // the empty sequence
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma - start);
    if (!all_digits(tok) || tok.size() > 9) {
      parse_fail(source, line, "bad degree entry '" + std::string(tok) + "'");
    }
    degrees.push_back(std::stoi(std::string(tok)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!is_canonical(degrees)) {
    parse_fail(source, line, "sequence is not canonical non-increasing positive");
  }
  return degrees;
}

}  // namespace

void write_cache(const MemoCache& cache, std::ostream& out) {
  std::vector<const MemoCache::Map::value_type*> records;
  records.reserve(cache.size());
  for (const auto& entry : cache.entries()) records.push_back(&entry);
  std::sort(records.begin(), records.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });

  out << kCacheFileHeader << '\n';
  for (const auto* record : records) {
    const auto& degrees = record->first;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (i > 0) out << ',';
      out << degrees[i];
    }
    out << '\t' << record->second << '\n';
  }
}

MemoCache read_cache(std::istream& in, const std::string& source_name) {
  MemoCache cache;
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kCacheFileHeader) {
    parse_fail(source_name, 1,
               "bad or missing header; expected '" + std::string(kCacheFileHeader) + "'");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) parse_fail(source_name, line_no, "empty record line");
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) parse_fail(source_name, line_no, "missing tab separator");
    if (line.find('\t', tab + 1) != std::string::npos) {
      parse_fail(source_name, line_no, "more than one tab separator");
    }
    std::vector<int> key = parse_key(std::string_view(line).substr(0, tab), source_name, line_no);
    const std::string_view value = std::string_view(line).substr(tab + 1);
    if (!all_digits(value)) parse_fail(source_name, line_no, "count is not a decimal integer");
    if (cache.contains(key)) parse_fail(source_name, line_no, "duplicate sequence");
    cache.store(std::move(key), Count(std::string(value)));
  }
  return cache;
}

void save_cache(const MemoCache& cache, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
  write_cache(cache, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing cache file: " + path);
}

MemoCache load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  return read_cache(in, path);
}

std::size_t merge_cache(MemoCache& into, const MemoCache& from) {
  std::size_t added = 0;
  for (const auto& [key, value] : from.entries()) {
    if (const Count* existing = into.find(key)) {
      if (*existing != value) {
        throw std::runtime_error("cache merge conflict on sequence '" +
                                 DegreeSequence::from_canonical(key).to_string() +
                                 "': caches hold different counts");
      }
      continue;
    }
    into.store(key, value);
    ++added;
  }
  return added;
}

}  // namespace degseq
