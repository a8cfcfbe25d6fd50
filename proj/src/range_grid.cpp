#include "gapmatch/range_grid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gapmatch {

RangeIndex::RangeIndex(std::vector<GridPoint> points) {
  std::sort(points.begin(), points.end(), [](const GridPoint& a, const GridPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i].x == points[i - 1].x && points[i].y == points[i - 1].y)
      throw std::logic_error("range index: duplicate (x, y) point");
  m_ = static_cast<int32_t>(points.size());
  xs_.reserve(points.size());
  for (const auto& p : points) xs_.push_back(p.x);
  if (m_ > 0) {
    slabs_.reserve(2 * static_cast<size_t>(m_));
    root_ = build(0, m_, points);
  }
}

int32_t RangeIndex::build(int32_t lo, int32_t hi, const std::vector<GridPoint>& pts) {
  const int32_t id = static_cast<int32_t>(slabs_.size());
  slabs_.emplace_back();
  slabs_[static_cast<size_t>(id)].lo = lo;
  slabs_[static_cast<size_t>(id)].hi = hi;
  if (hi - lo == 1) {
    slabs_[static_cast<size_t>(id)].ys.push_back(pts[static_cast<size_t>(lo)].y);
    slabs_[static_cast<size_t>(id)].payload.push_back(pts[static_cast<size_t>(lo)].payload);
    return id;
  }
  const int32_t mid = lo + (hi - lo) / 2;
  const int32_t l = build(lo, mid, pts);
  const int32_t r = build(mid, hi, pts);

  Slab& s = slabs_[static_cast<size_t>(id)];
  s.left = l;
  s.right = r;
  const Slab& ls = slabs_[static_cast<size_t>(l)];
  const Slab& rs = slabs_[static_cast<size_t>(r)];
  s.ys.reserve(ls.ys.size() + rs.ys.size());
  s.payload.reserve(ls.ys.size() + rs.ys.size());
  size_t i = 0, j = 0;
  while (i < ls.ys.size() || j < rs.ys.size()) {
    const bool take_left = j >= rs.ys.size() || (i < ls.ys.size() && ls.ys[i] <= rs.ys[j]);
    if (take_left) {
      s.ys.push_back(ls.ys[i]);
      s.payload.push_back(ls.payload[i]);
      ++i;
    } else {
      s.ys.push_back(rs.ys[j]);
      s.payload.push_back(rs.payload[j]);
      ++j;
    }
  }
  // Cascade pointers: lpos[k] = lower bound of ys[k] in the left child (rpos
  // likewise); both are monotone, so a single forward sweep fills them.
  s.lpos.resize(s.ys.size() + 1);
  s.rpos.resize(s.ys.size() + 1);
  size_t li = 0, ri = 0;
  for (size_t k = 0; k < s.ys.size(); ++k) {
    while (li < ls.ys.size() && ls.ys[li] < s.ys[k]) ++li;
    while (ri < rs.ys.size() && rs.ys[ri] < s.ys[k]) ++ri;
    s.lpos[k] = static_cast<int32_t>(li);
    s.rpos[k] = static_cast<int32_t>(ri);
  }
  s.lpos[s.ys.size()] = static_cast<int32_t>(ls.ys.size());
  s.rpos[s.ys.size()] = static_cast<int32_t>(rs.ys.size());
  return id;
}

void RangeIndex::query(int32_t slab, int32_t q_lo, int32_t q_hi, int32_t y_hi, int32_t ypos,
                       std::vector<int32_t>& out, uint64_t* comparisons) const {
  const Slab& s = slabs_[static_cast<size_t>(slab)];
  if (comparisons) ++*comparisons;
  if (ypos >= static_cast<int32_t>(s.ys.size())) return;  // nothing >= y_lo here
  if (q_lo <= s.lo && s.hi <= q_hi) {
    for (size_t k = static_cast<size_t>(ypos); k < s.ys.size(); ++k) {
      if (comparisons) ++*comparisons;
      if (s.ys[k] > y_hi) break;
      out.push_back(s.payload[k]);
    }
    return;
  }
  if (s.left < 0) return;  // leaf not fully covered cannot happen; ranks are exact
  const Slab& ls = slabs_[static_cast<size_t>(s.left)];
  if (q_lo < ls.hi && ls.lo < q_hi)
    query(s.left, q_lo, q_hi, y_hi, s.lpos[static_cast<size_t>(ypos)], out, comparisons);
  const Slab& rs = slabs_[static_cast<size_t>(s.right)];
  if (q_lo < rs.hi && rs.lo < q_hi)
    query(s.right, q_lo, q_hi, y_hi, s.rpos[static_cast<size_t>(ypos)], out, comparisons);
}

void RangeIndex::report(int32_t x_lo, int32_t x_hi, int32_t y_lo, int32_t y_hi,
                        std::vector<int32_t>& out, uint64_t* comparisons) const {
  if (m_ == 0) return;
  const auto lo_it = std::lower_bound(xs_.begin(), xs_.end(), x_lo);
  const auto hi_it = std::upper_bound(xs_.begin(), xs_.end(), x_hi);
  if (comparisons) *comparisons += 2 * static_cast<uint64_t>(std::bit_width(static_cast<uint64_t>(m_)));
  const int32_t q_lo = static_cast<int32_t>(lo_it - xs_.begin());
  const int32_t q_hi = static_cast<int32_t>(hi_it - xs_.begin());
  if (q_lo >= q_hi) return;
  const auto& root_ys = slabs_[static_cast<size_t>(root_)].ys;
  const auto y_it = std::lower_bound(root_ys.begin(), root_ys.end(), y_lo);
  if (comparisons) *comparisons += static_cast<uint64_t>(std::bit_width(static_cast<uint64_t>(m_)));
  query(root_, q_lo, q_hi, y_hi, static_cast<int32_t>(y_it - root_ys.begin()), out, comparisons);
}

std::vector<int32_t> RangeIndex::report(int32_t x_lo, int32_t x_hi, int32_t y_lo, int32_t y_hi,
                                        uint64_t* comparisons) const {
  std::vector<int32_t> out;
  report(x_lo, x_hi, y_lo, y_hi, out, comparisons);
  return out;
}

}  // namespace gapmatch
