#pragma once

// Height-bounded enumeration of base points and the parallel search harness
// that certifies each one and appends rows to a JSONL file.

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "arborist/serialize.hpp"

namespace arborist {

inline constexpr const char* kSchema = "arborist-v1";

/// Reduced r/s with 1 <= |r| <= H and 1 <= s <= H, ordered by s, then r.
std::vector<Rational> enumerate_rationals(unsigned long height);

/// False for the base points where the family degenerates.
bool admissible(const Rational& a, Family family);

struct SearchConfig {
  unsigned long height = 1;
  std::vector<Family> families{Family::Family1, Family::Family2};
  std::size_t depth = kDefaultAuditDepth;
  unsigned workers = 1;
  std::filesystem::path output;
};

struct SearchRow {
  Verdict verdict;
  double ms = 0;
};

SearchRow search_row(const Rational& a, Family family, std::size_t depth);

/// {a, family, r, s, verdict, ms}. Everything except ms is deterministic.
Json to_json(const SearchRow& row);

struct SearchSummary {
  std::size_t rows_written = 0;
  std::size_t rows_skipped = 0;  // already present in the output file
  std::map<std::string, std::size_t> by_status;
  std::map<std::string, std::size_t> by_condition;  // first firing condition
};

/// Appends one row per admissible (a, family) not already in cfg.output,
/// creating the file with a schema header if needed. Row order follows the
/// enumeration for any worker count. Throws InvalidInput on a bad config,
/// an unwritable path or a file with a foreign schema.
SearchSummary search(const SearchConfig& cfg);

/// Tallies over every row of an existing output file.
SearchSummary tally(const std::filesystem::path& jsonl);

/// Text table of the tallies.
std::string format_report(const SearchSummary& summary);

}  // namespace arborist
