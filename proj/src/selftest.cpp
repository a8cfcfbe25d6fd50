#include "gapmatch/selftest.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "gapmatch/engine.hpp"
#include "gapmatch/oracle.hpp"

namespace gapmatch {

namespace {

std::string first_difference(const std::vector<Occurrence>& a, const std::vector<Occurrence>& b) {
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    if (i >= a.size()) return "missing " + format_tsv(b[i], false);
    if (i >= b.size()) return "extra " + format_tsv(a[i], false);
    if (!(a[i] == b[i])) return format_tsv(a[i], false) + " vs " + format_tsv(b[i], false);
  }
  return "";
}

}  // namespace

int run_selftest(const SelftestOptions& opts, std::ostream& out) {
  int64_t failures = 0;
  for (int64_t trial = 0; trial < opts.trials; ++trial) {
    const uint64_t trial_seed = opts.seed * 1000000 + static_cast<uint64_t>(trial);
    const Instance inst = generate_instance(trial_seed, opts.limits);
    const QueryText text = QueryText::from(inst.text);

    const MatchIndex index = build_index(inst.dict);
    const auto expected = naive_scan(inst.dict, text);
    auto grid = scan(index, text, Backend::Grid);
    const auto lookup = scan(index, text, Backend::Lookup);
    const auto chunked_grid = scan_chunked(index, text, Backend::Grid);
    const auto chunked_lookup = scan_chunked(index, text, Backend::Lookup);

    if (opts.inject_fault) {
      if (!grid.empty())
        grid.pop_back();
      else
        grid.push_back({1, 0, 0, inst.dict.bounds.alpha});
    }

    const std::pair<const char*, const std::vector<Occurrence>*> checks[] = {
        {"grid vs oracle", &grid},
        {"lookup vs oracle", &lookup},
        {"chunked-grid vs oracle", &chunked_grid},
        {"chunked-lookup vs oracle", &chunked_lookup},
    };
    bool ok = true;
    for (const auto& [name, got] : checks) {
      if (*got != expected) {
        if (failures < 5) {
          out << "trial " << trial << " FAIL (" << name << "): " << inst.describe() << "\n";
          out << "  first difference: " << first_difference(*got, expected) << "\n";
        }
        ok = false;
      }
    }
    if (!ok) ++failures;
  }
  if (failures == 0) {
    out << "selftest: " << opts.trials << " trials passed\n";
    return 0;
  }
  out << "selftest: " << failures << " of " << opts.trials << " trials failed\n";
  return 1;
}

}  // namespace gapmatch
