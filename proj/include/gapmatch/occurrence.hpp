#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapmatch/dictionary.hpp"

namespace gapmatch {

// One pattern match: p1 occupies [start, start + |p1|), the gap covers `gap`
// text symbols, p2 ends at `end`. Positions are 0-based.
struct Occurrence {
  int32_t pattern_id = 0;  // original 1-based id
  int64_t end = 0;         // index of the last symbol of p2
  int64_t start = 0;       // index of the first symbol of p1
  int32_t gap = 0;

  bool operator==(const Occurrence&) const = default;
};

// Output order: (end, pattern_id, start, gap).
bool occurrence_less(const Occurrence& a, const Occurrence& b);

// Shared witness policy for the engine and the oracle: unless all_gaps is
// set, keep only the smallest gap per (pattern, p2-start); always sort by
// output order and drop exact duplicates.
std::vector<Occurrence> normalize_occurrences(std::vector<Occurrence> raw, bool all_gaps);

// True iff every record matches the text literally and respects the bounds.
bool verify_occurrences(const Dictionary& dict, std::string_view text,
                        const std::vector<Occurrence>& occs);

std::string format_tsv(const Occurrence& o, bool one_based);
std::string format_jsonl(const Occurrence& o, bool one_based);

// Query text over the byte alphabet; must not contain the separator byte.
struct QueryText {
  std::string_view bytes;

  static QueryText from(std::string_view text);  // throws std::invalid_argument on a separator byte
  int64_t n() const { return static_cast<int64_t>(bytes.size()); }
};

}  // namespace gapmatch
