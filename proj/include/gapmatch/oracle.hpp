#pragma once

#include <string_view>
#include <vector>

#include "gapmatch/dictionary.hpp"
#include "gapmatch/occurrence.hpp"

namespace gapmatch {

// Brute-force reference matcher: tries every (pattern, start, gap) triple and
// applies the shared witness policy. Ground truth for differential tests;
// O(n * d * (beta - alpha + 1) * maxlen), desk scale only.
std::vector<Occurrence> naive_scan(const Dictionary& dict, QueryText text, bool all_gaps = false);

}  // namespace gapmatch
