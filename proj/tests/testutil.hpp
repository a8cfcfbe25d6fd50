#pragma once

// Shared helpers for the test suites: brute-force oracles and structural
// validators kept independent of the library's query paths.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gapmatch/marking.hpp"
#include "gapmatch/suffix_tree.hpp"

namespace testutil {

using gapmatch::SuffixTree;

inline std::string node_string(const SuffixTree& t, int32_t v) {
  std::string s;
  for (int32_t w = v; w != SuffixTree::kRoot; w = t.nodes[static_cast<size_t>(w)].parent)
    s.insert(0, t.text.substr(static_cast<size_t>(t.nodes[static_cast<size_t>(w)].edge_start),
                              static_cast<size_t>(t.nodes[static_cast<size_t>(w)].edge_length())));
  return s;
}

// Longest prefix of `query` that occurs anywhere in `text` (naive).
inline int32_t naive_longest_match(std::string_view text, std::string_view query) {
  int32_t best = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    int32_t len = 0;
    while (i + static_cast<size_t>(len) < text.size() && static_cast<size_t>(len) < query.size() &&
           text[i + static_cast<size_t>(len)] == query[static_cast<size_t>(len)])
      ++len;
    best = std::max(best, len);
  }
  return best;
}

// Deepest explicit node with string_depth <= len on the path spelling
// word[0, len), found by a plain descent.
inline int32_t naive_locus_node(const SuffixTree& t, std::string_view word, int32_t len) {
  int32_t v = SuffixTree::kRoot;
  int32_t depth = 0;
  while (depth < len) {
    const int32_t c = t.nodes[static_cast<size_t>(v)].child(static_cast<unsigned char>(word[static_cast<size_t>(depth)]));
    if (c < 0) break;
    const int32_t el = t.nodes[static_cast<size_t>(c)].edge_length();
    if (depth + el > len) break;
    v = c;
    depth += el;
  }
  return v;
}

// Structural checks a freshly built (and possibly split) tree must satisfy.
// Verifies suffix coverage, leaf set, depth bookkeeping, child keys, suffix
// links, and the each-suffix-spelled invariant. Quadratic; small inputs only.
inline void validate_suffix_tree(const SuffixTree& t, bool split_done) {
  const std::string& s = t.text;
  const size_t n = s.size();
  REQUIRE(n >= 1);
  REQUIRE(s.back() == static_cast<char>(gapmatch::kSeparator));

  // Parent/child symmetry, child keys, depths.
  for (int32_t v = 0; v < t.node_count(); ++v) {
    const auto& nd = t.nodes[static_cast<size_t>(v)];
    if (v == SuffixTree::kRoot) {
      CHECK(nd.string_depth == 0);
    } else {
      REQUIRE(nd.parent >= 0);
      REQUIRE(nd.edge_length() >= 1);
      CHECK(nd.string_depth ==
            t.nodes[static_cast<size_t>(nd.parent)].string_depth + nd.edge_length());
      CHECK(t.nodes[static_cast<size_t>(nd.parent)].child(t.byte_at(nd.edge_start)) == v);
    }
    for (size_t k = 0; k + 1 < nd.children.size(); ++k)
      CHECK(nd.children[k].first < nd.children[k + 1].first);
    for (const auto& [b, c] : nd.children) {
      CHECK(t.nodes[static_cast<size_t>(c)].parent == v);
      CHECK(t.byte_at(t.nodes[static_cast<size_t>(c)].edge_start) == b);
    }
    if (!nd.from_split && !nd.is_leaf() && v != SuffixTree::kRoot)
      CHECK(nd.children.size() >= 2);
  }

  // Every suffix is spelled by a root-anchored path; suffixes that are not a
  // proper prefix of another suffix end at leaves, so root-to-leaf strings
  // are exactly those suffixes. In sorted order a string's extensions sit
  // right behind it, so only the successor needs checking.
  std::set<std::string> suffixes, maximal;
  for (size_t i = 0; i < n; ++i) suffixes.insert(s.substr(i));
  for (auto it = suffixes.begin(); it != suffixes.end(); ++it) {
    const auto& suf = *it;
    const auto nxt = std::next(it);
    const bool proper_prefix =
        nxt != suffixes.end() && nxt->size() > suf.size() && nxt->compare(0, suf.size(), suf) == 0;
    if (!proper_prefix) maximal.insert(suf);
    // descend explicitly
    size_t matched = 0;
    int32_t v = SuffixTree::kRoot;
    while (matched < suf.size()) {
      const int32_t c = t.nodes[static_cast<size_t>(v)].child(static_cast<unsigned char>(suf[matched]));
      REQUIRE(c >= 0);
      const auto& nd = t.nodes[static_cast<size_t>(c)];
      const size_t take = std::min(static_cast<size_t>(nd.edge_length()), suf.size() - matched);
      CHECK(s.compare(static_cast<size_t>(nd.edge_start), take, suf, matched, take) == 0);
      matched += take;
      v = c;
    }
  }
  std::set<std::string> leaf_strings;
  for (int32_t v = 0; v < t.node_count(); ++v)
    if (t.nodes[static_cast<size_t>(v)].is_leaf()) leaf_strings.insert(node_string(t, v));
  CHECK(leaf_strings == maximal);

  // Suffix links: string(link(v)) == string(v) minus its first symbol.
  for (int32_t v = 1; v < t.node_count(); ++v) {
    const auto& nd = t.nodes[static_cast<size_t>(v)];
    if (nd.is_leaf()) continue;
    REQUIRE(nd.suffix_link >= 0);
    CHECK(node_string(t, nd.suffix_link) == node_string(t, v).substr(1));
  }

  if (split_done) {
    // Along separator-free paths no edge may hide an interior separator, so
    // every separator-free prefix followed by a separator ends on a node.
    std::vector<int32_t> stack = {SuffixTree::kRoot};
    while (!stack.empty()) {
      const int32_t v = stack.back();
      stack.pop_back();
      for (const auto& [b, c] : t.nodes[static_cast<size_t>(v)].children) {
        if (b == gapmatch::kSeparator) continue;
        const auto& nd = t.nodes[static_cast<size_t>(c)];
        for (int32_t k = 1; k < nd.edge_length(); ++k)
          CHECK(t.byte_at(nd.edge_start + k) != gapmatch::kSeparator);
        stack.push_back(c);
      }
    }
  }
}

// Random separator-joined string over a small alphabet (mimics the
// concatenated dictionary sides: nonempty symbol blocks joined by single
// separators).
inline std::string random_joined_string(std::mt19937_64& rng, int32_t max_blocks, int32_t max_block_len,
                                        int32_t sigma) {
  std::uniform_int_distribution<int32_t> blocks_dist(1, max_blocks);
  std::uniform_int_distribution<int32_t> len_dist(1, max_block_len);
  std::uniform_int_distribution<int32_t> sym(0, sigma - 1);
  std::string s;
  const int32_t blocks = blocks_dist(rng);
  for (int32_t b = 0; b < blocks; ++b) {
    if (b > 0) s.push_back(static_cast<char>(gapmatch::kSeparator));
    const int32_t len = len_dist(rng);
    for (int32_t k = 0; k < len; ++k) s.push_back(static_cast<char>('a' + sym(rng)));
  }
  return s;
}

inline std::string random_symbols(std::mt19937_64& rng, int32_t len, int32_t sigma) {
  std::uniform_int_distribution<int32_t> sym(0, sigma - 1);
  std::string s(static_cast<size_t>(len), 'a');
  for (auto& c : s) c = static_cast<char>('a' + sym(rng));
  return s;
}

// Hand-built tree for decomposition and marking tests: node 0 is the root,
// parent[v] < v, every edge gets length 1 with a distinct first byte per
// sibling.
inline SuffixTree synthetic_tree(const std::vector<int32_t>& parent) {
  SuffixTree t;
  t.text.assign(parent.size() + 1, 'a');
  t.nodes.resize(parent.size() + 1);
  for (size_t v = 1; v < t.nodes.size(); ++v) {
    auto& nd = t.nodes[v];
    nd.parent = parent[v - 1];
    nd.edge_start = static_cast<int32_t>(v - 1);
    nd.edge_end = static_cast<int32_t>(v);
    auto& siblings = t.nodes[static_cast<size_t>(nd.parent)].children;
    siblings.push_back({static_cast<unsigned char>(siblings.size()), static_cast<int32_t>(v)});
    nd.string_depth = t.nodes[static_cast<size_t>(nd.parent)].string_depth + 1;
  }
  return t;
}

// Marks of all marked ancestors-or-self collected by walking parent links.
inline std::vector<int32_t> ancestor_marks(const SuffixTree& t, const gapmatch::MarkAssignment& a,
                                           int32_t node) {
  std::vector<int32_t> marks;
  for (int32_t v = node; v >= 0; v = t.nodes[static_cast<size_t>(v)].parent)
    if (a.mark_of_node[static_cast<size_t>(v)] >= 0) marks.push_back(a.mark_of_node[static_cast<size_t>(v)]);
  std::sort(marks.begin(), marks.end());
  return marks;
}

}  // namespace testutil
