#pragma once

#include <cstdint>
#include <string>

#include "gapmatch/dictionary.hpp"

namespace gapmatch {

// Knobs for the seeded instance generator used by the self-test, the bench
// command and the randomized test suites.
struct GenLimits {
  int32_t max_d = 64;       // pattern lines
  int32_t max_n = 2000;     // text length
  int32_t max_len = 12;     // subpattern length cap (lengths are geometric)
  int32_t max_beta = 8;     // alpha and beta both stay within [0, max_beta]
  int32_t plant_per_ten = 4;   // plant occurrences in this many seeds out of ten
  int32_t nested_per_ten = 4;  // draw subpatterns from a prefix-closed pool likewise
};

struct Instance {
  uint64_t seed = 0;
  int32_t sigma = 0;
  bool nested_pool = false;
  bool planted = false;
  std::string dict_text;  // exact file-format bytes the dictionary was parsed from
  Dictionary dict;
  std::string text;

  std::string describe() const;  // one reproducing line: seed + parameters
};

// Deterministic instance per seed. Sequential seeds hit the planted and
// nested flavors at exactly plant_per_ten / nested_per_ten out of every ten.
// Alphabet size cycles through {2, 4, 26}; duplicate pattern lines appear
// occasionally so alias merging is exercised.
Instance generate_instance(uint64_t seed, const GenLimits& limits = {});

}  // namespace gapmatch
