#include "gapmatch/inter_table.hpp"

#include <cassert>
#include <stdexcept>

namespace gapmatch {

InterTable build_inter(const MarkAssignment& bfs_f, const MarkAssignment& bfs_s,
                       const std::vector<GridPoint>& points) {
  if (bfs_f.scheme != MarkScheme::Bfs || bfs_s.scheme != MarkScheme::Bfs)
    throw std::logic_error("inter table requires BFS-scheme assignments");

  InterTable t;
  t.rows_ = bfs_f.count;
  t.cols_ = bfs_s.count;
  t.prev_f_ = bfs_f.prev_mark;
  t.prev_s_ = bfs_s.prev_mark;
  t.payload_bound_ = static_cast<int32_t>(points.size());
  t.cells_.assign(static_cast<size_t>(t.rows_) * static_cast<size_t>(t.cols_), InterCell{});
  t.fill_ops_ += t.prev_f_.size() + t.prev_s_.size();

  auto at = [&](int32_t g, int32_t h) -> InterCell& {
    return t.cells_[static_cast<size_t>(g) * static_cast<size_t>(t.cols_) + static_cast<size_t>(h)];
  };
  auto flat = [&](int32_t g, int32_t h) { return g * t.cols_ + h; };

  for (const GridPoint& p : points) {
    InterCell& c = at(p.x, p.y);
    if (c.index >= 0) throw std::logic_error("inter table: two patterns share both loci");
    c.index = p.payload;
    ++t.fill_ops_;
  }

  for (int32_t g = 0; g < t.rows_; ++g) {
    const int32_t pg = t.prev_f_[static_cast<size_t>(g)];
    for (int32_t h = 0; h < t.cols_; ++h) {
      const int32_t ph = t.prev_s_[static_cast<size_t>(h)];
      InterCell& c = at(g, h);

      t.fill_ops_ += 3;
      if (pg >= 0) {
        const InterCell& above = at(pg, h);
        c.up = above.index >= 0 ? flat(pg, h) : above.up;
      }
      if (ph >= 0) {
        const InterCell& beside = at(g, ph);
        c.left = beside.index >= 0 ? flat(g, ph) : beside.left;
      }
      if (pg >= 0 && ph >= 0) {
        const InterCell& diag = at(pg, ph);
        c.prev = (diag.index >= 0 || diag.up >= 0 || diag.left >= 0) ? flat(pg, ph) : diag.prev;
      }
    }
  }
  return t;
}

namespace {

void emit(int32_t id, std::vector<int32_t>& out, LookupScratch& scratch, LookupStats* stats) {
  if (scratch.try_emit(id)) {
    out.push_back(id);
    if (stats) ++stats->emitted;
  } else if (stats) {
    ++stats->suppressed;
  }
}

void query_rec(const InterTable& t, int32_t g, int32_t h, std::vector<int32_t>& out,
               LookupScratch& scratch, LookupStats* stats) {
  const int32_t cols = t.cols();
  const InterCell* c = &t.cell(g, h);

  if (c->index >= 0) emit(c->index, out, scratch, stats);

  if (c->prev >= 0) {
    if (stats) ++stats->link_follows;
    query_rec(t, c->prev / cols, c->prev % cols, out, scratch, stats);
  }

  // Up chain: every link target holds an index by construction.
  for (const InterCell* w = c; w->up >= 0;) {
    if (stats) ++stats->link_follows;
    const int32_t gg = w->up / cols;
    w = &t.cell(gg, h);
    assert(w->index >= 0);
    emit(w->index, out, scratch, stats);
  }
  // Left chain, from the original cell.
  for (const InterCell* w = c; w->left >= 0;) {
    if (stats) ++stats->link_follows;
    const int32_t hh = w->left % cols;
    w = &t.cell(g, hh);
    assert(w->index >= 0);
    emit(w->index, out, scratch, stats);
  }
}

}  // namespace

void lookup_query(const InterTable& table, int32_t g, int32_t h, std::vector<int32_t>& out,
                  LookupScratch& scratch, LookupStats* stats) {
  if (g < 0 || h < 0) return;
  scratch.begin(table.payload_bound());
  query_rec(table, g, h, out, scratch, stats);
}

std::vector<int32_t> lookup_query(const InterTable& table, int32_t g, int32_t h,
                                  LookupStats* stats) {
  std::vector<int32_t> out;
  LookupScratch scratch;
  lookup_query(table, g, h, out, scratch, stats);
  return out;
}

}  // namespace gapmatch
