#include "gapmatch/oracle.hpp"

namespace gapmatch {

std::vector<Occurrence> naive_scan(const Dictionary& dict, QueryText text, bool all_gaps) {
  const std::string_view t = text.bytes;
  const int64_t n = text.n();
  std::vector<Occurrence> raw;

  for (size_t c = 0; c < dict.patterns.size(); ++c) {
    const std::string& p1 = dict.patterns[c].p1;
    const std::string& p2 = dict.patterns[c].p2;
    const int64_t l1 = static_cast<int64_t>(p1.size());
    const int64_t l2 = static_cast<int64_t>(p2.size());
    for (int64_t s = 0; s + l1 <= n; ++s) {
      if (t.compare(static_cast<size_t>(s), static_cast<size_t>(l1), p1) != 0) continue;
      for (int32_t gap = dict.bounds.alpha; gap <= dict.bounds.beta; ++gap) {
        const int64_t p2_start = s + l1 + gap;
        if (p2_start + l2 > n) break;
        if (t.compare(static_cast<size_t>(p2_start), static_cast<size_t>(l2), p2) != 0) continue;
        for (int32_t id : dict.aliases[c]) raw.push_back({id, p2_start + l2 - 1, s, gap});
      }
    }
  }
  return normalize_occurrences(std::move(raw), all_gaps);
}

}  // namespace gapmatch
