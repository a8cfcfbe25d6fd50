#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gapmatch/dictionary.hpp"
#include "gapmatch/inter_table.hpp"
#include "gapmatch/marking.hpp"
#include "gapmatch/occurrence.hpp"
#include "gapmatch/range_grid.hpp"
#include "gapmatch/suffix_tree.hpp"

namespace gapmatch {

enum class Backend { Grid, Lookup };

struct BuildOptions {
  bool build_grid = true;
  bool build_lookup = true;
};

// Everything the scan needs, immutable after build_index: both suffix trees
// (separator-split), their decompositions, both mark schemes over the
// subpattern loci, and the requested backend structures.
struct MatchIndex {
  Dictionary dict;

  SuffixTree tree_s;   // over S  = p_{1,2} sep ... sep p_{d,2}
  SuffixTree tree_fr;  // over reverse(F), F = p_{1,1} sep ... sep p_{d,1}
  VerticalPathDecomposition decomp_s, decomp_fr;
  std::vector<int32_t> p2_node;   // per canonical pattern: locus of p2 in tree_s
  std::vector<int32_t> p1r_node;  // per canonical pattern: locus of reverse(p1) in tree_fr

  MarkAssignment vp_s, vp_fr;    // vertical-path scheme (grid backend)
  MarkAssignment bfs_s, bfs_fr;  // BFS scheme (lookup backend)
  PatternLinks links;            // under the vertical-path scheme

  std::optional<RangeIndex> grid;
  std::optional<InterTable> inter;

  int64_t chunk_window() const { return dict.max_span; }
};

MatchIndex build_index(Dictionary dict, const BuildOptions& opts = {});

struct ScanOptions {
  bool all_gaps = false;  // report every qualifying gap instead of the smallest per (pattern, p2-start)
};

struct ScanStats {
  uint64_t ms_symbol_comparisons = 0;    // both matching-statistics passes
  uint64_t ms_link_hops = 0;
  uint64_t intersection_invocations = 0;  // sum of per-position gap-window sizes
  uint64_t grid_comparisons = 0;
  uint64_t lookup_link_follows = 0;
  uint64_t lookup_suppressed = 0;
};

// The full query algorithm: matching statistics of the text against tree_s
// and of the reversed text against tree_fr, then for every p2 start and every
// gap in [alpha, beta] the two loci are intersected through the chosen
// backend. Both backends return identical sets.
std::vector<Occurrence> scan(const MatchIndex& index, QueryText text, Backend backend,
                             const ScanOptions& opts = {}, ScanStats* stats = nullptr);

// Chunked scan for long texts: two staggered series of windows of length 2m
// (m = max occurrence span), each scanned independently; equals scan() exactly.
std::vector<Occurrence> scan_chunked(const MatchIndex& index, QueryText text, Backend backend,
                                     const ScanOptions& opts = {}, ScanStats* stats = nullptr);

struct ChunkPlan {
  int64_t m = 0;
  std::vector<std::pair<int64_t, int64_t>> chunks;  // (offset, length <= 2m)
};

// Offsets 0, m, 2m, ... each opening a window of length 2m (clipped at n),
// skipping windows contained in their predecessor. Every text interval of
// length <= m lies wholly inside at least one chunk.
ChunkPlan make_chunk_plan(int64_t n, int64_t m);

// Per-position intersection primitives, exposed for differential tests.
// Canonical ids whose reversed p1 ends at the g-locus path and whose p2
// starts at the h-locus path.
std::vector<int32_t> intersect_grid(const MatchIndex& index, const Locus& g_locus,
                                    const Locus& h_locus, uint64_t* comparisons = nullptr);
std::vector<int32_t> intersect_lookup(const MatchIndex& index, const Locus& g_locus,
                                      const Locus& h_locus, LookupScratch& scratch,
                                      LookupStats* stats = nullptr);

}  // namespace gapmatch
