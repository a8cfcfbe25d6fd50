#pragma once

#include <cstdint>
#include <vector>

#include "gapmatch/marking.hpp"

namespace gapmatch {

// Static 2D orthogonal range reporting over a fixed point set: a layered
// range tree (points sorted by x, every x-range carrying its y-sorted
// sublist) with fractional cascading, so a report costs one binary search
// plus O(1) per level plus the output.
class RangeIndex {
 public:
  RangeIndex() = default;
  explicit RangeIndex(std::vector<GridPoint> points);

  // Payloads of all points inside the closed rectangle, no duplicates.
  void report(int32_t x_lo, int32_t x_hi, int32_t y_lo, int32_t y_hi,
              std::vector<int32_t>& out, uint64_t* comparisons = nullptr) const;
  std::vector<int32_t> report(int32_t x_lo, int32_t x_hi, int32_t y_lo, int32_t y_hi,
                              uint64_t* comparisons = nullptr) const;

  int32_t size() const { return m_; }

 private:
  struct Slab {
    int32_t lo = 0, hi = 0;       // x-rank range [lo, hi)
    int32_t left = -1, right = -1;
    std::vector<int32_t> ys;      // ascending
    std::vector<int32_t> payload;
    std::vector<int32_t> lpos, rpos;  // cascade: lower-bound positions in the children
  };

  int32_t build(int32_t lo, int32_t hi, const std::vector<GridPoint>& pts);
  void query(int32_t slab, int32_t q_lo, int32_t q_hi, int32_t y_hi, int32_t ypos,
             std::vector<int32_t>& out, uint64_t* comparisons) const;

  std::vector<int32_t> xs_;  // x per rank, ascending
  std::vector<Slab> slabs_;
  int32_t root_ = -1;
  int32_t m_ = 0;
};

}  // namespace gapmatch
