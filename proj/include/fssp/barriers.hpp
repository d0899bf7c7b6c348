#pragma once

#include <deque>
#include <tuple>

#include "grid.hpp"

namespace fssp {

struct Rect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  int width() const noexcept { return x1 - x0 + 1; }
  int height() const noexcept { return y1 - y0 + 1; }
  bool empty() const noexcept { return x0 > x1 || y0 > y1; }
  bool contains(Position p) const noexcept { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  bool contains(const Rect& r) const noexcept {
    return r.x0 >= x0 && r.x1 <= x1 && r.y0 >= y0 && r.y1 <= y1;
  }
  Position sw() const noexcept { return {x0, y0}; }

  // canonical order is (x0, y0, x1, y1)
  friend bool operator<(const Rect& a, const Rect& b) {
    return std::tie(a.x0, a.y0, a.x1, a.y1) < std::tie(b.x0, b.y0, b.x1, b.y1);
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

inline std::string to_string(const Rect& r) {
  return "[" + std::to_string(r.x0) + ".." + std::to_string(r.x1) + "]x[" + std::to_string(r.y0) + ".." +
         std::to_string(r.y1) + "]";
}

// Equal, edge-adjacent or corner-touching.
inline bool touches(const Rect& a, const Rect& b) {
  return a.x0 <= b.x1 + 1 && b.x0 <= a.x1 + 1 && a.y0 <= b.y1 + 1 && b.y0 <= a.y1 + 1;
}

namespace detail {

inline bool column_has_hole(const Configuration& c, int x, int y0, int y1) {
  for (int y = y0; y <= y1; ++y)
    if (c.is_hole({x, y})) return true;
  return false;
}

inline bool row_has_hole(const Configuration& c, int y, int x0, int x1) {
  for (int x = x0; x <= x1; ++x)
    if (c.is_hole({x, y})) return true;
  return false;
}

}  // namespace detail

inline bool is_barrier(const Configuration& c, const Rect& r) {
  if (r.empty()) return false;
  for (int x = r.x0; x <= r.x1; ++x)
    if (!detail::column_has_hole(c, x, r.y0, r.y1)) return false;
  for (int y = r.y0; y <= r.y1; ++y)
    if (!detail::row_has_hole(c, y, r.x0, r.x1)) return false;
  return true;
}

// Splitting algorithm. Start from the interior square and keep cutting away
// hole-free columns and rows until every remaining rectangle is a barrier.
inline std::vector<Rect> maximal_barriers(const Configuration& c) {
  std::vector<Rect> out;
  const int w = c.size();
  if (w < 2) return out;
  std::deque<Rect> work{Rect{1, 1, w - 1, w - 1}};
  while (!work.empty()) {
    Rect r = work.front();
    work.pop_front();
    if (r.empty()) continue;
    bool cut = false;
    for (int x = r.x0; x <= r.x1 && !cut; ++x) {
      if (detail::column_has_hole(c, x, r.y0, r.y1)) continue;
      cut = true;
      if (x > r.x0) work.push_back({r.x0, r.y0, x - 1, r.y1});
      if (x < r.x1) work.push_back({x + 1, r.y0, r.x1, r.y1});
    }
    for (int y = r.y0; y <= r.y1 && !cut; ++y) {
      if (detail::row_has_hole(c, y, r.x0, r.x1)) continue;
      cut = true;
      if (y > r.y0) work.push_back({r.x0, r.y0, r.x1, y - 1});
      if (y < r.y1) work.push_back({r.x0, y + 1, r.x1, r.y1});
    }
    if (!cut) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Testing oracle: every rectangle of the square, keep barriers, keep the
// inclusion-maximal ones.
inline std::vector<Rect> maximal_barriers_bruteforce(const Configuration& c) {
  const int w = c.size();
  std::vector<Rect> all;
  for (int x0 = 0; x0 <= w; ++x0)
    for (int x1 = x0; x1 <= w; ++x1)
      for (int y0 = 0; y0 <= w; ++y0)
        for (int y1 = y0; y1 <= w; ++y1) {
          Rect r{x0, y0, x1, y1};
          if (is_barrier(c, r)) all.push_back(r);
        }
  std::vector<Rect> out;
  for (const auto& r : all) {
    bool maximal = true;
    for (const auto& s : all)
      if (!(s == r) && s.contains(r)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<Rect> containing_barrier(const std::vector<Rect>& bars, Position v) {
  for (const auto& r : bars)
    if (r.contains(v)) return r;
  return std::nullopt;
}

inline bool corner_mh_access(const Configuration& c, Position corner, Position v) {
  const int w = c.size();
  const bool is_corner = (corner.x == 0 || corner.x == w) && (corner.y == 0 || corner.y == w);
  if (!is_corner) throw Error(ErrorCode::PreconditionViolated, "not a corner: " + to_string(corner));
  return bfs_distance(c, corner, v) == mh_distance(corner, v);
}

}  // namespace fssp
