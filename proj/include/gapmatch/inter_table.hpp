#pragma once

#include <cstdint>
#include <vector>

#include "gapmatch/marking.hpp"

namespace gapmatch {

// One cell of the lookup table. Links are flat-encoded cell ids (g * cols + h)
// or -1 for null; index is a canonical pattern id or -1.
//   up   -> the deepest proper-ancestor row g' with a pattern at (g', h)
//   left -> the deepest proper-ancestor column h' with a pattern at (g, h')
//   prev -> the nearest diagonal-ancestor cell holding an index, up or left
struct InterCell {
  int32_t index = -1;
  int32_t up = -1;
  int32_t left = -1;
  int32_t prev = -1;
};

class InterTable {
 public:
  InterTable() = default;

  int32_t rows() const { return rows_; }
  int32_t cols() const { return cols_; }
  const InterCell& cell(int32_t g, int32_t h) const {
    return cells_[static_cast<size_t>(g) * static_cast<size_t>(cols_) + static_cast<size_t>(h)];
  }
  int32_t prev_row(int32_t g) const { return prev_f_[static_cast<size_t>(g)]; }
  int32_t prev_col(int32_t h) const { return prev_s_[static_cast<size_t>(h)]; }
  uint64_t fill_ops() const { return fill_ops_; }
  int32_t payload_bound() const { return payload_bound_; }

  friend InterTable build_inter(const MarkAssignment& bfs_f, const MarkAssignment& bfs_s,
                                const std::vector<GridPoint>& points);

 private:
  int32_t rows_ = 0, cols_ = 0;
  std::vector<InterCell> cells_;
  std::vector<int32_t> prev_f_, prev_s_;  // nearest marked proper ancestor per mark
  uint64_t fill_ops_ = 0;
  int32_t payload_bound_ = 0;
};

// Builds the rows x cols table from BFS-scheme assignments (ancestors carry
// smaller marks, so a row-major fill only reads finished cells). One grid
// point per canonical pattern seeds the index fields.
InterTable build_inter(const MarkAssignment& bfs_f, const MarkAssignment& bfs_s,
                       const std::vector<GridPoint>& points);

struct LookupStats {
  uint64_t link_follows = 0;
  uint64_t emitted = 0;
  uint64_t suppressed = 0;  // emissions the dedup collector swallowed
};

// Per-query dedup collector; private to one querying thread.
class LookupScratch {
 public:
  void begin(int32_t universe) {
    if (stamp_.size() < static_cast<size_t>(universe)) stamp_.resize(static_cast<size_t>(universe), 0);
    ++epoch_;
  }
  bool try_emit(int32_t id) {
    if (stamp_[static_cast<size_t>(id)] == epoch_) return false;
    stamp_[static_cast<size_t>(id)] = epoch_;
    return true;
  }

 private:
  std::vector<uint64_t> stamp_;
  uint64_t epoch_ = 0;
};

// All canonical ids whose first-side mark is g or an ancestor of it and whose
// second-side mark is h or an ancestor of it; empty when g or h is -1. Each
// id appears once; total link follows stay within 3 * (|result| + 1).
void lookup_query(const InterTable& table, int32_t g, int32_t h, std::vector<int32_t>& out,
                  LookupScratch& scratch, LookupStats* stats = nullptr);
std::vector<int32_t> lookup_query(const InterTable& table, int32_t g, int32_t h,
                                  LookupStats* stats = nullptr);

}  // namespace gapmatch
