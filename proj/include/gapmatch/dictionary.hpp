#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gapmatch {

// Reserved separator byte. It joins subpatterns in the concatenated side
// strings and may not occur inside subpatterns or query texts.
inline constexpr unsigned char kSeparator = 0x00;

struct GapBounds {
  int32_t alpha = 0;  // minimum number of don't-care positions
  int32_t beta = 0;   // maximum number of don't-care positions

  bool operator==(const GapBounds&) const = default;
};

struct GappedPattern {
  int32_t original_id = 0;  // 1-based input order of the first line carrying this (p1, p2)
  std::string p1;
  std::string p2;

  bool operator==(const GappedPattern&) const = default;
};

// Validated single-gap dictionary. Exact duplicate (p1, p2) lines are merged
// into one canonical pattern; aliases[c] lists the original line ids of
// canonical pattern c in ascending order. Immutable after construction.
struct Dictionary {
  std::vector<GappedPattern> patterns;  // canonical, pairwise distinct (p1, p2)
  std::vector<std::vector<int32_t>> aliases;
  GapBounds bounds;
  int32_t original_count = 0;  // number of pattern lines in the input

  int64_t total_len = 0;  // sum of |p1| + |p2| over canonical patterns (gaps excluded)
  int32_t min_p1 = 0;     // min |p1|
  int64_t max_span = 0;   // max (|p1| + |p2|) + beta; bounds every occurrence span

  int32_t d() const { return static_cast<int32_t>(patterns.size()); }

  bool operator==(const Dictionary&) const = default;
};

struct ParseError : std::runtime_error {
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
  int line;
};

enum class Side { First, Second };

// Dictionary file format: first non-comment line holds `<alpha> <beta>`;
// every further non-empty line holds `<p1> TAB <p2>`; lines starting with '#'
// are ignored. TAB and the separator byte are forbidden inside subpatterns.
Dictionary parse_dictionary(std::istream& in);
Dictionary parse_dictionary(std::string_view data);

// Inverse of parse_dictionary: one line per original id, duplicates included,
// so parsing the result reproduces the dictionary exactly.
std::string serialize_dictionary(const Dictionary& dict);

// p_{1,side} sep p_{2,side} sep ... sep p_{d,side}, no trailing separator.
// Callers reverse the Side::First result to index reversed prefixes.
std::string concatenate_side(const Dictionary& dict, Side side);

}  // namespace gapmatch
