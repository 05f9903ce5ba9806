#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "degseq/memo_cache.hpp"

namespace degseq {

// Line-oriented cache persistence. Format:
//
//   degseq-cache v1 nonincreasing
//   <d1,d2,...,dn> TAB <decimal count>
//
// Sequences are canonical non-increasing (the empty sequence serializes as
// an empty field), counts are plain base-10. Records are written in
// lexicographic key order, so identical caches save byte-identically.
inline constexpr std::string_view kCacheFileHeader = "degseq-cache v1 nonincreasing";

void write_cache(const MemoCache& cache, std::ostream& out);

// Throws std::runtime_error naming "<source>:<line>" on a bad header,
// malformed record, non-canonical sequence, or duplicate key.
MemoCache read_cache(std::istream& in, const std::string& source_name = "<stream>");

void save_cache(const MemoCache& cache, const std::string& path);
MemoCache load_cache(const std::string& path);

// Adds every record of `from` into `into`; returns the number of new
// entries. Throws std::runtime_error if the two caches disagree on a key —
// caches hold only true counts, so a conflict means one file is corrupt.
std::size_t merge_cache(MemoCache& into, const MemoCache& from);

}  // namespace degseq
