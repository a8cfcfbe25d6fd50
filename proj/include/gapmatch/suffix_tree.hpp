#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapmatch/dictionary.hpp"

namespace gapmatch {

// Suffix tree over a separator-joined string (S or F reversed).
//
// build_suffix_tree() appends one trailing separator byte, so every
// subpattern occurrence in the indexed text is followed by a separator;
// after split_separator_edges() the boundary in front of every separator is
// an explicit node, which makes every subpattern locus explicit.
struct SuffixTree {
  struct Node {
    int32_t parent = -1;
    int32_t edge_start = 0;  // label = text[edge_start, edge_end)
    int32_t edge_end = 0;
    int32_t suffix_link = -1;
    int32_t string_depth = 0;
    bool from_split = false;
    std::vector<std::pair<unsigned char, int32_t>> children;  // sorted by first byte

    int32_t child(unsigned char b) const;
    void set_child(unsigned char b, int32_t node);
    int32_t edge_length() const { return edge_end - edge_start; }
    bool is_leaf() const { return children.empty(); }
  };

  static constexpr int32_t kRoot = 0;

  std::string text;  // indexed text: input plus one trailing separator
  std::vector<Node> nodes;

  int32_t node_count() const { return static_cast<int32_t>(nodes.size()); }
  unsigned char byte_at(int32_t i) const { return static_cast<unsigned char>(text[static_cast<size_t>(i)]); }

  // Nodes in root-first order (every parent precedes its children).
  std::vector<int32_t> bfs_order() const;
};

SuffixTree build_suffix_tree(std::string_view input);

// For every edge on a separator-free root path whose label hides a separator
// at offset > 0, inserts an explicit node in front of that first separator,
// then completes suffix links for the nodes this creates. Afterwards every
// separator-free prefix that the text follows with a separator ends at an
// explicit node, so every subpattern locus is explicit.
void split_separator_edges(SuffixTree& tree);

// Position of a matched prefix: the deepest explicit node at depth <= match_len.
struct Locus {
  int32_t node = SuffixTree::kRoot;
  int32_t match_len = 0;

  bool operator==(const Locus&) const = default;
};

struct MsStats {
  uint64_t symbol_comparisons = 0;  // query symbol vs edge symbol
  uint64_t link_hops = 0;
  uint64_t descend_steps = 0;  // skip/count edge jumps after a hop
};

// result[p].match_len = length of the longest prefix of query[p..] spelled
// from the root; result[p].node = deepest explicit node with string_depth <=
// match_len. The query must not contain the separator byte. Amortized linear
// via suffix links.
std::vector<Locus> matching_statistics(const SuffixTree& tree, std::string_view query,
                                       MsStats* stats = nullptr);

}  // namespace gapmatch
