#include "gapmatch/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapmatch {

MatchIndex build_index(Dictionary dict, const BuildOptions& opts) {
  MatchIndex idx;
  idx.dict = std::move(dict);
  const Dictionary& d = idx.dict;

  const std::string s = concatenate_side(d, Side::Second);
  std::string fr = concatenate_side(d, Side::First);
  std::reverse(fr.begin(), fr.end());

  idx.tree_s = build_suffix_tree(s);
  split_separator_edges(idx.tree_s);
  idx.tree_fr = build_suffix_tree(fr);
  split_separator_edges(idx.tree_fr);

  std::vector<std::string> p2s, p1rs;
  p2s.reserve(d.patterns.size());
  p1rs.reserve(d.patterns.size());
  for (const auto& p : d.patterns) {
    p2s.push_back(p.p2);
    p1rs.emplace_back(p.p1.rbegin(), p.p1.rend());
  }
  idx.p2_node = locate_subpattern_nodes(idx.tree_s, p2s);
  idx.p1r_node = locate_subpattern_nodes(idx.tree_fr, p1rs);

  idx.decomp_s = decompose_vertical_paths(idx.tree_s);
  idx.decomp_fr = decompose_vertical_paths(idx.tree_fr);

  idx.vp_s = assign_marks(idx.tree_s, idx.decomp_s, idx.p2_node, MarkScheme::VerticalPath);
  idx.vp_fr = assign_marks(idx.tree_fr, idx.decomp_fr, idx.p1r_node, MarkScheme::VerticalPath);
  idx.bfs_s = assign_marks(idx.tree_s, idx.decomp_s, idx.p2_node, MarkScheme::Bfs);
  idx.bfs_fr = assign_marks(idx.tree_fr, idx.decomp_fr, idx.p1r_node, MarkScheme::Bfs);

  auto [links, vp_points] = build_pattern_links(idx.p1r_node, idx.p2_node, idx.vp_fr, idx.vp_s);
  idx.links = std::move(links);
  if (opts.build_grid) idx.grid.emplace(std::move(vp_points));
  if (opts.build_lookup) {
    auto [bfs_links, bfs_points] = build_pattern_links(idx.p1r_node, idx.p2_node, idx.bfs_fr, idx.bfs_s);
    (void)bfs_links;
    idx.inter = build_inter(idx.bfs_fr, idx.bfs_s, bfs_points);
  }
  return idx;
}

std::vector<int32_t> intersect_grid(const MatchIndex& index, const Locus& g_locus,
                                    const Locus& h_locus, uint64_t* comparisons) {
  std::vector<int32_t> out;
  const auto ig = path_mark_intervals(index.vp_fr, index.decomp_fr, g_locus.node);
  const auto ih = path_mark_intervals(index.vp_s, index.decomp_s, h_locus.node);
  for (const MarkInterval& a : ig)
    for (const MarkInterval& b : ih)
      index.grid->report(a.lo, a.hi, b.lo, b.hi, out, comparisons);
  return out;
}

std::vector<int32_t> intersect_lookup(const MatchIndex& index, const Locus& g_locus,
                                      const Locus& h_locus, LookupScratch& scratch,
                                      LookupStats* stats) {
  std::vector<int32_t> out;
  lookup_query(*index.inter, deepest_marked_ancestor(index.bfs_fr, g_locus.node),
               deepest_marked_ancestor(index.bfs_s, h_locus.node), out, scratch, stats);
  return out;
}

namespace {

// Unnormalized alias-expanded candidates of one text window; positions are
// window-local.
std::vector<Occurrence> scan_raw(const MatchIndex& index, std::string_view text, Backend backend,
                                 const ScanOptions& opts, ScanStats* stats) {
  const Dictionary& dict = index.dict;
  if (backend == Backend::Grid && !index.grid)
    throw std::logic_error("grid backend was not built");
  if (backend == Backend::Lookup && !index.inter)
    throw std::logic_error("lookup backend was not built");
  const int64_t n = static_cast<int64_t>(text.size());
  std::vector<Occurrence> raw;
  if (n == 0) return raw;

  MsStats ms_stats;
  const std::vector<Locus> ms_s = matching_statistics(index.tree_s, text, &ms_stats);
  std::string rtext(text.rbegin(), text.rend());
  const std::vector<Locus> ms_fr = matching_statistics(index.tree_fr, rtext, &ms_stats);
  if (stats) {
    stats->ms_symbol_comparisons += ms_stats.symbol_comparisons;
    stats->ms_link_hops += ms_stats.link_hops;
  }

  const int64_t alpha = dict.bounds.alpha;
  const int64_t beta = dict.bounds.beta;
  const int64_t min_p1 = dict.min_p1;

  // Per-position backend keys. ends_key[f] describes the reversed prefixes
  // ending at f, starts_key[l] the subpatterns starting at l.
  std::vector<std::vector<MarkInterval>> g_intervals, h_intervals;
  std::vector<int32_t> g_marks, h_marks;
  if (backend == Backend::Grid) {
    h_intervals.resize(static_cast<size_t>(n));
    g_intervals.resize(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
      h_intervals[static_cast<size_t>(i)] =
          path_mark_intervals(index.vp_s, index.decomp_s, ms_s[static_cast<size_t>(i)].node);
      g_intervals[static_cast<size_t>(i)] =
          path_mark_intervals(index.vp_fr, index.decomp_fr, ms_fr[static_cast<size_t>(i)].node);
    }
  } else {
    h_marks.resize(static_cast<size_t>(n));
    g_marks.resize(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
      h_marks[static_cast<size_t>(i)] =
          deepest_marked_ancestor(index.bfs_s, ms_s[static_cast<size_t>(i)].node);
      g_marks[static_cast<size_t>(i)] =
          deepest_marked_ancestor(index.bfs_fr, ms_fr[static_cast<size_t>(i)].node);
    }
  }

  LookupScratch scratch;
  LookupStats lstats;
  uint64_t grid_cmp = 0;
  std::vector<int32_t> ids;
  std::vector<uint64_t> seen(dict.patterns.size(), 0);
  uint64_t epoch = 0;

  for (int64_t l = min_p1 + alpha; l < n; ++l) {
    ++epoch;
    const int64_t f_hi = l - alpha - 1;
    const int64_t f_lo = std::max(l - beta - 1, static_cast<int64_t>(min_p1) - 1);
    for (int64_t f = f_hi; f >= f_lo; --f) {
      if (stats) ++stats->intersection_invocations;
      const int32_t gap = static_cast<int32_t>(l - f - 1);
      ids.clear();
      if (backend == Backend::Grid) {
        const auto& ig = g_intervals[static_cast<size_t>(n - 1 - f)];
        const auto& ih = h_intervals[static_cast<size_t>(l)];
        for (const MarkInterval& a : ig)
          for (const MarkInterval& b : ih) index.grid->report(a.lo, a.hi, b.lo, b.hi, ids, &grid_cmp);
      } else {
        lookup_query(*index.inter, g_marks[static_cast<size_t>(n - 1 - f)],
                     h_marks[static_cast<size_t>(l)], ids, scratch, &lstats);
      }
      for (const int32_t c : ids) {
        if (!opts.all_gaps) {
          if (seen[static_cast<size_t>(c)] == epoch) continue;  // a smaller gap already matched here
          seen[static_cast<size_t>(c)] = epoch;
        }
        const auto& p = dict.patterns[static_cast<size_t>(c)];
        const int64_t end = l + static_cast<int64_t>(p.p2.size()) - 1;
        const int64_t start = f - static_cast<int64_t>(p.p1.size()) + 1;
        for (const int32_t id : dict.aliases[static_cast<size_t>(c)])
          raw.push_back({id, end, start, gap});
      }
    }
  }
  if (stats) {
    stats->grid_comparisons += grid_cmp;
    stats->lookup_link_follows += lstats.link_follows;
    stats->lookup_suppressed += lstats.suppressed;
  }
  return raw;
}

}  // namespace

std::vector<Occurrence> scan(const MatchIndex& index, QueryText text, Backend backend,
                             const ScanOptions& opts, ScanStats* stats) {
  return normalize_occurrences(scan_raw(index, text.bytes, backend, opts, stats), opts.all_gaps);
}

ChunkPlan make_chunk_plan(int64_t n, int64_t m) {
  ChunkPlan plan;
  plan.m = m;
  for (int64_t k = 0;; ++k) {
    const int64_t off = k * m;
    if (off >= n) break;
    if (k > 0 && off + m >= n) break;  // contained in the previous chunk
    plan.chunks.push_back({off, std::min(2 * m, n - off)});
  }
  return plan;
}

std::vector<Occurrence> scan_chunked(const MatchIndex& index, QueryText text, Backend backend,
                                     const ScanOptions& opts, ScanStats* stats) {
  const ChunkPlan plan = make_chunk_plan(text.n(), index.chunk_window());
  std::vector<Occurrence> raw;
  for (const auto& [off, len] : plan.chunks) {
    std::vector<Occurrence> part = scan_raw(
        index, text.bytes.substr(static_cast<size_t>(off), static_cast<size_t>(len)), backend, opts, stats);
    for (Occurrence& o : part) {
      o.end += off;
      o.start += off;
      raw.push_back(o);
    }
  }
  return normalize_occurrences(std::move(raw), opts.all_gaps);
}

}  // namespace gapmatch
