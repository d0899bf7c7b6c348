#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>

#include "grid.hpp"

namespace fssp {

// A W x H hole grid in which every row and every column has a hole.
// Bit (y * W + x) of mask is the cell (x, y).
struct BarrierShape {
  int W = 0;
  int H = 0;
  std::uint64_t mask = 0;

  bool is_hole(Position p) const noexcept {
    if (p.x < 0 || p.y < 0 || p.x >= W || p.y >= H) return false;
    return (mask >> (p.y * W + p.x)) & 1u;
  }
  int holes() const noexcept { return __builtin_popcountll(mask); }

  std::vector<Position> hole_list() const {
    std::vector<Position> out;
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x)
        if (is_hole({x, y})) out.push_back({x, y});
    return out;
  }

  static BarrierShape from_holes(int W, int H, const std::vector<Position>& hs) {
    BarrierShape s{W, H, 0};
    for (auto p : hs) s.mask |= std::uint64_t{1} << (p.y * W + p.x);
    return s;
  }

  BarrierShape transposed() const {
    BarrierShape t{H, W, 0};
    for (auto p : hole_list()) t.mask |= std::uint64_t{1} << (p.x * H + p.y);
    return t;
  }

  bool covers_rows_and_columns() const {
    for (int x = 0; x < W; ++x) {
      bool any = false;
      for (int y = 0; y < H; ++y) any = any || is_hole({x, y});
      if (!any) return false;
    }
    for (int y = 0; y < H; ++y) {
      bool any = false;
      for (int x = 0; x < W; ++x) any = any || is_hole({x, y});
      if (!any) return false;
    }
    return true;
  }

  friend bool operator==(const BarrierShape&, const BarrierShape&) = default;
};

struct ShapeEval {
  int d0 = 0;
  int d1 = 0;
  int e_max = 0;
  int delta_opt = 0;
  int epsilon_opt = 0;
};

// ---- budget ----

inline constexpr int kDefaultBudgetK = 6;

// Largest k the c_k engine will run. FSSP_BUDGET_K overrides everything.
inline int budget_cap(bool allow_k7 = false) {
  if (const char* env = std::getenv("FSSP_BUDGET_K")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v < 64) return static_cast<int>(v);
  }
  return allow_k7 ? 7 : kDefaultBudgetK;
}

// ---- enumeration ----

// Calls fn(shape) for every shape with at most k holes. Shapes are raw grids;
// no symmetry is quotiented out. Rows are filled bottom-up with nonempty hole
// masks; the search keeps enough budget to cover every remaining row and
// every still-uncovered column.
template <typename Fn>
void for_each_shape_in(int W, int H, int k, Fn&& fn, std::uint32_t first_row_only = 0) {
  const std::uint32_t full = (1u << W) - 1;
  std::function<void(int, int, std::uint32_t, std::uint64_t)> rec = [&](int y, int used, std::uint32_t cols,
                                                                         std::uint64_t mask) {
    if (y == H) {
      if (cols == full) fn(BarrierShape{W, H, mask});
      return;
    }
    for (std::uint32_t row = 1; row <= full; ++row) {
      if (y == 0 && first_row_only && row != first_row_only) continue;
      const int n = __builtin_popcount(row);
      const int left = k - used - n;
      const int rows_after = H - y - 1;
      const int uncovered = __builtin_popcount(full & ~(cols | row));
      if (left < rows_after || left < uncovered) continue;
      rec(y + 1, used + n, cols | row, mask | (std::uint64_t{row} << (y * W)));
    }
  };
  rec(0, 0, 0, 0);
}

// ---- d0 / d1 ----

namespace detail {

// BFS in the enlarged (W+2) x (H+2) grid; cell (x, y) of the shape is stored
// at ((x+1), (y+1)). Returns -1 for holes.
inline void enlarged_bfs(const BarrierShape& s, Position src, std::vector<int>& dist) {
  const int EW = s.W + 2, EH = s.H + 2;
  dist.assign(static_cast<std::size_t>(EW) * EH, -1);
  int q[(9 + 2) * (9 + 2) + 64];
  std::vector<int> big;
  int* queue = q;
  if (EW * EH > static_cast<int>(sizeof(q) / sizeof(int))) {
    big.resize(static_cast<std::size_t>(EW) * EH);
    queue = big.data();
  }
  int head = 0, tail = 0;
  const int si = (src.y + 1) * EW + (src.x + 1);
  dist[si] = 0;
  queue[tail++] = si;
  while (head < tail) {
    const int cur = queue[head++];
    const int cx = cur % EW, cy = cur / EW;
    for (auto d : kDirs) {
      const int nx = cx + d.x, ny = cy + d.y;
      if (nx < 0 || ny < 0 || nx >= EW || ny >= EH) continue;
      if (s.is_hole({nx - 1, ny - 1})) continue;
      const int ni = ny * EW + nx;
      if (dist[ni] >= 0) continue;
      dist[ni] = dist[cur] + 1;
      queue[tail++] = ni;
    }
  }
}

// A shape can only occur inside a connected configuration when none of its
// cells is sealed off by holes.
inline bool all_nodes_reached(const BarrierShape& s, const std::vector<int>& dist) {
  for (int y = 0; y < s.H; ++y)
    for (int x = 0; x < s.W; ++x)
      if (!s.is_hole({x, y}) && dist[(y + 1) * (s.W + 2) + (x + 1)] < 0) return false;
  return true;
}

}  // namespace detail

// True when every non-hole cell is reachable from the enlarged rectangle's
// frame. Sealed shapes cannot appear in a valid configuration and are not
// members of S_k.
inline bool is_connected_shape(const BarrierShape& s) {
  std::vector<int> a;
  detail::enlarged_bfs(s, {-1, s.H}, a);
  return detail::all_nodes_reached(s, a);
}

template <typename Fn>
void enumerate_shapes(int k, Fn&& fn, bool allow_k7 = false) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  if (k > budget_cap(allow_k7)) throw Error(ErrorCode::BudgetExceeded, "k=" + std::to_string(k));
  for (int W = 1; W <= k; ++W)
    for (int H = 1; H <= k; ++H)
      for_each_shape_in(W, H, k, [&](const BarrierShape& s) {
        if (is_connected_shape(s)) fn(s);
      });
}

inline std::pair<int, int> d0_d1(const BarrierShape& s, Position p) {
  if (p.x < 0 || p.y < 0 || p.x >= s.W || p.y >= s.H || s.is_hole(p))
    throw Error(ErrorCode::PreconditionViolated, "p is not a node of the shape: " + to_string(p));
  std::vector<int> a, b;
  detail::enlarged_bfs(s, {-1, s.H}, a);
  detail::enlarged_bfs(s, {s.W, -1}, b);
  const int idx = (p.y + 1) * (s.W + 2) + (p.x + 1);
  if (a[idx] < 0 || b[idx] < 0) throw Error(ErrorCode::Unreachable, to_string(p));
  return {a[idx], b[idx]};
}

inline int e_of(const BarrierShape& s, int d0, int d1, int delta) {
  return std::min(delta - s.H - 1 + d0, -delta - s.W - 1 + d1);
}

inline int e_of(const BarrierShape& s, Position p, int delta) {
  auto [d0, d1] = d0_d1(s, p);
  return e_of(s, d0, d1, delta);
}

inline ShapeEval evaluate_distances(int W, int H, Position p, int d0, int d1) {
  ShapeEval e;
  e.d0 = d0;
  e.d1 = d1;
  e.e_max = (-W - H - 2 + d0 + d1) / 2;
  e.delta_opt = (-W + H - d0 + d1) / 2;
  e.epsilon_opt = e.delta_opt + p.x - p.y;
  return e;
}

inline ShapeEval evaluate(const BarrierShape& s, Position p) {
  auto [d0, d1] = d0_d1(s, p);
  return evaluate_distances(s.W, s.H, p, d0, d1);
}

// ---- c_k ----

struct ArgmaxPair {
  BarrierShape shape;
  Position p;
};

struct CkResult {
  int k = 0;
  int c_k = 0;
  long long shapes = 0;
  long long pairs = 0;
  long long argmax_pairs = 0;
  std::vector<ArgmaxPair> argmax;  // filled only on request
};

struct CkOptions {
  int jobs = 1;
  bool list_argmax = false;
  bool allow_k7 = false;
};

namespace detail {

struct CkPartial {
  int best = -1;
  long long shapes = 0, pairs = 0, argmax = 0;
  std::vector<ArgmaxPair> list;

  void visit(const BarrierShape& s, bool keep) {
    std::vector<int> a, b;
    enlarged_bfs(s, {-1, s.H}, a);
    if (!all_nodes_reached(s, a)) return;
    enlarged_bfs(s, {s.W, -1}, b);
    ++shapes;
    for (int y = 0; y < s.H; ++y)
      for (int x = 0; x < s.W; ++x) {
        if (s.is_hole({x, y})) continue;
        ++pairs;
        const int idx = (y + 1) * (s.W + 2) + (x + 1);
        const int e = (-s.W - s.H - 2 + a[idx] + b[idx]) / 2;
        if (e > best) {
          best = e;
          argmax = 0;
          list.clear();
        }
        if (e == best) {
          ++argmax;
          if (keep) list.push_back({s, {x, y}});
        }
      }
  }

  void merge(CkPartial&& o) {
    shapes += o.shapes;
    pairs += o.pairs;
    if (o.best > best) {
      best = o.best;
      argmax = o.argmax;
      list = std::move(o.list);
    } else if (o.best == best) {
      argmax += o.argmax;
      list.insert(list.end(), o.list.begin(), o.list.end());
    }
  }
};

}  // namespace detail

inline CkResult compute_ck(int k, const CkOptions& opt = {}) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  if (k > 8) throw Error(ErrorCode::BudgetExceeded, "shape masks hold at most 8x8 grids");
  if (k > budget_cap(opt.allow_k7)) throw Error(ErrorCode::BudgetExceeded, "k=" + std::to_string(k));

  // Work items: (W, H, first-row mask). Merging is associative, so the
  // partition does not change the result.
  struct Item {
    int W, H;
    std::uint32_t row0;
  };
  std::vector<Item> items;
  for (int W = 1; W <= k; ++W)
    for (int H = 1; H <= k; ++H)
      for (std::uint32_t r = 1; r < (1u << W); ++r) items.push_back({W, H, r});

  const int jobs = std::max(1, opt.jobs);
  std::vector<detail::CkPartial> parts(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&](int id) {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& it = items[i];
      for_each_shape_in(
          it.W, it.H, k, [&](const BarrierShape& s) { parts[id].visit(s, opt.list_argmax); }, it.row0);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& t : pool) t.join();
  }
  detail::CkPartial all;
  for (auto& p : parts) all.merge(std::move(p));

  CkResult r;
  r.k = k;
  r.c_k = all.best;
  r.shapes = all.shapes;
  r.pairs = all.pairs;
  r.argmax_pairs = all.argmax;
  r.argmax = std::move(all.list);
  std::sort(r.argmax.begin(), r.argmax.end(), [](const ArgmaxPair& a, const ArgmaxPair& b) {
    return std::tie(a.shape.W, a.shape.H, a.shape.mask, a.p.x, a.p.y) <
           std::tie(b.shape.W, b.shape.H, b.shape.mask, b.p.x, b.p.y);
  });
  return r;
}

inline std::pair<int, int> ck_bounds(int k) {
  if (k < 3) throw Error(ErrorCode::PreconditionViolated, "bounds stated for k >= 3");
  return {k - 2, k * k + 4 * k};
}

// 2w + c_k once w clears (k^2 + 7k + 5) / 2; nullopt (Unknown) below it.
inline std::optional<int> h_kw(int k, int w, const CkOptions& opt = {}) {
  if (k < 2) throw Error(ErrorCode::PreconditionViolated, "k must be >= 2");
  if (2 * w < k * k + 7 * k + 5) return std::nullopt;
  return 2 * w + compute_ck(k, opt).c_k;
}

// Reference c_k table, k = 2..9.
struct CkTableRow {
  int k, c_k;
  long long shapes, pairs, argmax_pairs;
};

inline constexpr std::array<CkTableRow, 8> kPublishedCk{{
    {2, 1, 5, 4, 2},
    {3, 1, 29, 80, 34},
    {4, 2, 224, 1324, 16},
    {5, 3, 2220, 22588, 24},
    {6, 4, 26898, 416782, 14},
    {7, 5, 384344, 8397762, 20},
    {8, 6, 6314747, 184619252, 26},
    {9, 7, 117140060, 4411162884LL, 32},
}};

}  // namespace fssp
