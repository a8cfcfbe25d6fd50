#pragma once

#include <cstdint>
#include <iosfwd>

#include "gapmatch/generator.hpp"

namespace gapmatch {

struct SelftestOptions {
  uint64_t seed = 42;
  int64_t trials = 100;
  GenLimits limits;
  bool inject_fault = false;  // test hook: corrupt one engine's output to prove mismatches are caught
};

// Runs `trials` random instances and checks grid == lookup == oracle and
// chunked == unchunked for both backends. Returns 0 iff everything passed;
// failures print the reproducing instance line.
int run_selftest(const SelftestOptions& opts, std::ostream& out);

}  // namespace gapmatch
