#pragma once

#include <cstdint>
#include <vector>

#include "gapmatch/suffix_tree.hpp"

namespace gapmatch {

// Heavy-path decomposition: every node lies on exactly one vertical path, and
// any root-to-node walk crosses at most floor(log2 N) + 1 paths.
struct VerticalPathDecomposition {
  std::vector<int32_t> path_of_node;          // per node
  std::vector<int32_t> pos_in_path;           // index of the node within its path
  std::vector<std::vector<int32_t>> paths;    // per path: nodes by increasing depth
  std::vector<int32_t> path_parent;           // node the path head hangs from, -1 for the root path

  int32_t path_count() const { return static_cast<int32_t>(paths.size()); }
};

VerticalPathDecomposition decompose_vertical_paths(const SuffixTree& tree);

// Number of distinct vertical paths met on the root-to-node walk, maximised
// over all nodes.
int32_t max_root_path_crossings(const SuffixTree& tree, const VerticalPathDecomposition& dec);

enum class MarkScheme {
  VerticalPath,  // marks consecutive along each vertical path, increasing with depth
  Bfs,           // level order: ancestors always carry smaller marks
};

// Marks are 0-based. node_of_mark/mark_of_node map between marks and nodes;
// the remaining vectors are per-scheme query acceleration filled by
// assign_marks.
struct MarkAssignment {
  MarkScheme scheme = MarkScheme::VerticalPath;
  int32_t count = 0;
  std::vector<int32_t> node_of_mark;
  std::vector<int32_t> mark_of_node;  // -1 for unmarked nodes

  // VerticalPath scheme: per path, the first mark on it (-1 if none) and the
  // pos_in_path values of its marked nodes in increasing depth.
  std::vector<int32_t> path_first_mark;
  std::vector<std::vector<int32_t>> path_marked_pos;

  // Bfs scheme: per node, mark of the deepest marked ancestor-or-self (-1 if
  // none); per mark, the nearest marked proper ancestor's mark (-1 if none).
  std::vector<int32_t> nearest_mark_at_or_self;
  std::vector<int32_t> prev_mark;
};

MarkAssignment assign_marks(const SuffixTree& tree, const VerticalPathDecomposition& dec,
                            const std::vector<int32_t>& marked_nodes, MarkScheme scheme);

// Explicit node whose root path spells exactly the subpattern, one per input
// string. Requires a separator-split tree whose text contains every
// subpattern followed by a separator; failure is a build-order bug.
std::vector<int32_t> locate_subpattern_nodes(const SuffixTree& tree,
                                             const std::vector<std::string>& subpatterns);

struct MarkInterval {
  int32_t lo = 0;
  int32_t hi = 0;  // inclusive

  bool operator==(const MarkInterval&) const = default;
};

// Disjoint mark intervals whose union is exactly the set of marks on the
// root-to-locus path (inclusive); one interval per crossed vertical path that
// holds a marked node at or above the locus. VerticalPath scheme only.
std::vector<MarkInterval> path_mark_intervals(const MarkAssignment& assign,
                                              const VerticalPathDecomposition& dec,
                                              int32_t locus_node);

// Mark of the deepest marked node on the root-to-node path (inclusive), or -1.
// Bfs scheme only.
int32_t deepest_marked_ancestor(const MarkAssignment& assign, int32_t node);

struct PatternLink {
  int32_t pattern = 0;  // canonical pattern index
  int32_t partner = 0;  // mark of the pattern's other-side locus

  bool operator==(const PatternLink&) const = default;
};

// A_F (indexed by marks in the reversed-prefix tree) and A_S (indexed by
// marks in the suffix tree); (i,h) in a_f[g] iff (i,g) in a_s[h].
struct PatternLinks {
  std::vector<std::vector<PatternLink>> a_f;
  std::vector<std::vector<PatternLink>> a_s;
};

struct GridPoint {
  int32_t x = 0;        // mark in the reversed-prefix tree
  int32_t y = 0;        // mark in the suffix tree
  int32_t payload = 0;  // canonical pattern index

  bool operator==(const GridPoint&) const = default;
};

// One grid point per canonical pattern at its two locus marks, plus the
// symmetric link arrays.
std::pair<PatternLinks, std::vector<GridPoint>> build_pattern_links(
    const std::vector<int32_t>& p1r_nodes, const std::vector<int32_t>& p2_nodes,
    const MarkAssignment& assign_f, const MarkAssignment& assign_s);

}  // namespace gapmatch
