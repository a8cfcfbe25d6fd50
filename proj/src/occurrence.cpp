#include "gapmatch/occurrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gapmatch {

bool occurrence_less(const Occurrence& a, const Occurrence& b) {
  return std::tie(a.end, a.pattern_id, a.start, a.gap) < std::tie(b.end, b.pattern_id, b.start, b.gap);
}

std::vector<Occurrence> normalize_occurrences(std::vector<Occurrence> raw, bool all_gaps) {
  if (!all_gaps) {
    // end determines the p2 start for a fixed pattern, so grouping by
    // (pattern, end) groups by (pattern, p2-start).
    std::sort(raw.begin(), raw.end(), [](const Occurrence& a, const Occurrence& b) {
      return std::tie(a.pattern_id, a.end, a.gap, a.start) < std::tie(b.pattern_id, b.end, b.gap, b.start);
    });
    std::vector<Occurrence> kept;
    kept.reserve(raw.size());
    for (const Occurrence& o : raw)
      if (kept.empty() || kept.back().pattern_id != o.pattern_id || kept.back().end != o.end)
        kept.push_back(o);
    raw = std::move(kept);
  }
  std::sort(raw.begin(), raw.end(), occurrence_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return raw;
}

bool verify_occurrences(const Dictionary& dict, std::string_view text,
                        const std::vector<Occurrence>& occs) {
  std::vector<const GappedPattern*> by_original(static_cast<size_t>(dict.original_count), nullptr);
  for (size_t c = 0; c < dict.patterns.size(); ++c)
    for (int32_t id : dict.aliases[c]) by_original[static_cast<size_t>(id - 1)] = &dict.patterns[c];

  for (const Occurrence& o : occs) {
    if (o.pattern_id < 1 || o.pattern_id > dict.original_count) return false;
    const GappedPattern& p = *by_original[static_cast<size_t>(o.pattern_id - 1)];
    if (o.gap < dict.bounds.alpha || o.gap > dict.bounds.beta) return false;
    const int64_t l1 = static_cast<int64_t>(p.p1.size());
    const int64_t l2 = static_cast<int64_t>(p.p2.size());
    if (o.end - o.start + 1 != l1 + o.gap + l2) return false;
    if (o.start < 0 || o.end >= static_cast<int64_t>(text.size())) return false;
    if (text.compare(static_cast<size_t>(o.start), static_cast<size_t>(l1), p.p1) != 0) return false;
    if (text.compare(static_cast<size_t>(o.end - l2 + 1), static_cast<size_t>(l2), p.p2) != 0) return false;
  }
  return true;
}

std::string format_tsv(const Occurrence& o, bool one_based) {
  const int64_t off = one_based ? 1 : 0;
  return std::to_string(o.pattern_id) + "\t" + std::to_string(o.end + off) + "\t" +
         std::to_string(o.start + off) + "\t" + std::to_string(o.gap);
}

std::string format_jsonl(const Occurrence& o, bool one_based) {
  const int64_t off = one_based ? 1 : 0;
  return "{\"pattern_id\":" + std::to_string(o.pattern_id) + ",\"end\":" + std::to_string(o.end + off) +
         ",\"start\":" + std::to_string(o.start + off) + ",\"gap\":" + std::to_string(o.gap) + "}";
}

QueryText QueryText::from(std::string_view text) {
  const size_t bad = text.find(static_cast<char>(kSeparator));
  if (bad != std::string_view::npos)
    throw std::invalid_argument("query text contains reserved separator byte 0x00 at offset " +
                                std::to_string(bad));
  return QueryText{text};
}

}  // namespace gapmatch
