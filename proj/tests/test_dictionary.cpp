#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>

#include "gapmatch/dictionary.hpp"
#include "gapmatch/generator.hpp"

using namespace gapmatch;

TEST_CASE("parse computes derived sizes") {
  const Dictionary d = parse_dictionary("2 4\nab\tcd\na\td\n");
  CHECK(d.d() == 2);
  CHECK(d.total_len == 6);
  CHECK(d.min_p1 == 1);
  CHECK(d.max_span == 8);
  CHECK(d.bounds.alpha == 2);
  CHECK(d.bounds.beta == 4);
  CHECK(d.patterns[0].p1 == "ab");
  CHECK(d.patterns[0].p2 == "cd");
  CHECK(d.patterns[1].original_id == 2);
}

TEST_CASE("duplicate lines merge into one canonical pattern with aliases") {
  const Dictionary d = parse_dictionary("1 2\nab\tcd\nab\tcd\n");
  CHECK(d.d() == 1);
  CHECK(d.original_count == 2);
  CHECK(d.aliases[0] == std::vector<int32_t>{1, 2});
}

TEST_CASE("distinct parse errors name the offending line") {
  CHECK_THROWS_WITH_AS(parse_dictionary("3 1\na\tb\n"), "line 1: alpha > beta", ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary("0 1\n\tb\n"), "line 2: empty subpattern", ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary("0 1\na\t\n"), "line 2: empty subpattern", ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary("0 1\nab cd\n"),
                       "line 2: missing TAB between subpatterns", ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary("0 1\na\tb\tc\n"), "line 2: subpattern contains TAB",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary(std::string_view("0 1\na\0b\tc\n", 10)),
                       "line 2: subpattern contains reserved separator byte 0x00", ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary("nope\n"),
                       "line 1: malformed header (expected '<alpha> <beta>')", ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary("1\n"),
                       "line 1: malformed header (expected '<alpha> <beta>')", ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary("-1 2\na\tb\n"),
                       "line 1: malformed header (expected '<alpha> <beta>')", ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary("0 1\n"), "line 2: empty dictionary (no pattern lines)",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_dictionary(""), "line 1: malformed header (expected '<alpha> <beta>')",
                       ParseError);
}

TEST_CASE("comments and blank lines are skipped") {
  const Dictionary d = parse_dictionary("# two patterns\n0 0\n\nx\ty\n# done\nz\tw\n");
  CHECK(d.d() == 2);
  CHECK(d.patterns[0].original_id == 1);
  CHECK(d.patterns[1].original_id == 2);

  CHECK_THROWS_WITH_AS(parse_dictionary("# only comments\n# nothing else\n"),
                       "line 3: malformed header (expected '<alpha> <beta>')", ParseError);
}

TEST_CASE("alpha == 0 permits adjacent subpatterns") {
  const Dictionary d = parse_dictionary("0 0\na\tb\n");
  CHECK(d.bounds.alpha == 0);
  CHECK(d.max_span == 2);
}

TEST_CASE("concatenate_side joins with single separators") {
  const Dictionary two = parse_dictionary("0 1\nab\tcd\na\td\n");
  CHECK(concatenate_side(two, Side::First) == std::string("ab\0a", 4));
  CHECK(concatenate_side(two, Side::Second) == std::string("cd\0d", 4));

  const Dictionary one = parse_dictionary("0 1\nq\tcd\n");
  CHECK(concatenate_side(one, Side::Second) == "cd");

  const Dictionary three = parse_dictionary("0 1\nq\tx\nr\ty\ns\tz\n");
  CHECK(concatenate_side(three, Side::Second) == std::string("x\0y\0z", 5));
}

TEST_CASE("serialize then reparse reproduces the dictionary exactly") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = generate_instance(rng());
    const Dictionary reparsed = parse_dictionary(serialize_dictionary(inst.dict));
    CHECK(reparsed == inst.dict);
  }
}

TEST_CASE("derived sizes and alias expansion hold on random dictionaries") {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = generate_instance(seed);
    const Dictionary& d = inst.dict;

    int64_t sum = 0;
    for (const auto& p : d.patterns) {
      sum += static_cast<int64_t>(p.p1.size() + p.p2.size());
      const int64_t lower = static_cast<int64_t>(p.p1.size()) + d.bounds.beta +
                            static_cast<int64_t>(p.p2.size()) - (d.bounds.beta - d.bounds.alpha);
      CHECK(d.max_span >= lower);
      CHECK(d.max_span >= static_cast<int64_t>(p.p1.size() + p.p2.size()) + d.bounds.beta);
    }
    CHECK(sum == d.total_len);

    std::vector<int32_t> ids;
    for (const auto& list : d.aliases) {
      CHECK(!list.empty());
      ids.insert(ids.end(), list.begin(), list.end());
    }
    std::sort(ids.begin(), ids.end());
    REQUIRE(static_cast<int32_t>(ids.size()) == d.original_count);
    for (int32_t i = 0; i < d.original_count; ++i) CHECK(ids[static_cast<size_t>(i)] == i + 1);

    for (size_t a = 0; a < d.patterns.size(); ++a)
      for (size_t b = a + 1; b < d.patterns.size(); ++b)
        CHECK((d.patterns[a].p1 != d.patterns[b].p1 || d.patterns[a].p2 != d.patterns[b].p2));
  }
}
