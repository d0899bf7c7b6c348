#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fssp {

// Error codes shared by every module. The CLI maps them to exit codes.
enum class ErrorCode {
  NotANode,
  OutOfSquare,
  WrongHoleCount,
  SizeMismatch,
  SizeTooSmall,
  NotInBarrier,
  NotUpperBoundCase,
  PreconditionViolated,
  BudgetExceeded,
  Unreachable,
  InvalidInput,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotANode: return "NotANode";
    case ErrorCode::OutOfSquare: return "OutOfSquare";
    case ErrorCode::WrongHoleCount: return "WrongHoleCount";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::NotInBarrier: return "NotInBarrier";
    case ErrorCode::NotUpperBoundCase: return "NotUpperBoundCase";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Position {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Position&, const Position&) = default;
  constexpr Position operator+(Position o) const { return {x + o.x, y + o.y}; }
  constexpr Position operator-(Position o) const { return {x - o.x, y - o.y}; }
};

inline std::string to_string(Position p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline constexpr Position kGeneral{0, 0};

// east, north, west, south -- the bit order of a boundary condition
inline constexpr std::array<Position, 4> kDirs{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

inline int mh_distance(Position a, Position b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

using BoundaryCondition = std::array<int, 4>;

class Configuration;

enum class Rejection { BoundaryHole, TooManyHoles, Disconnected };

inline const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::BoundaryHole: return "BoundaryHole";
    case Rejection::TooManyHoles: return "TooManyHoles";
    case Rejection::Disconnected: return "Disconnected";
  }
  return "?";
}

struct RejectionReport {
  Rejection kind;
  Position witness;  // offending hole, or a node not reachable from the general
  std::string message;
};

// A square of side w (positions 0..w in both axes) with interior holes.
// Only validate() and the unchecked factory build one.
class Configuration {
 public:
  Configuration() = default;

  int size() const noexcept { return w_; }
  int side() const noexcept { return w_ + 1; }
  int k() const noexcept { return static_cast<int>(holes_.size()); }
  const std::vector<Position>& holes() const noexcept { return holes_; }

  bool in_square(Position p) const noexcept {
    return p.x >= 0 && p.y >= 0 && p.x <= w_ && p.y <= w_;
  }
  int index(Position p) const noexcept { return p.y * (w_ + 1) + p.x; }
  Position at(int idx) const noexcept { return {idx % (w_ + 1), idx / (w_ + 1)}; }
  int cells() const noexcept { return (w_ + 1) * (w_ + 1); }

  bool is_hole(Position p) const noexcept { return in_square(p) && hole_[index(p)]; }
  bool is_node(Position p) const noexcept { return in_square(p) && !hole_[index(p)]; }

  std::vector<Position> nodes() const {
    std::vector<Position> out;
    out.reserve(cells() - k());
    for (int i = 0; i < cells(); ++i)
      if (!hole_[i]) out.push_back(at(i));
    return out;
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.w_ == b.w_ && a.holes_ == b.holes_;
  }

  // Skips the invariant checks. Callers that enumerate candidates use this
  // after checking the invariants themselves.
  static Configuration unchecked(int w, std::vector<Position> holes) {
    Configuration c;
    c.w_ = w;
    std::sort(holes.begin(), holes.end());
    holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
    c.holes_ = std::move(holes);
    c.hole_.assign(static_cast<std::size_t>(w + 1) * (w + 1), 0);
    for (auto h : c.holes_)
      if (c.in_square(h)) c.hole_[c.index(h)] = 1;
    return c;
  }

 private:
  int w_ = 0;
  std::vector<Position> holes_;
  std::vector<std::uint8_t> hole_;
};

// Distances from one source to every cell; -1 marks holes and unreached cells.
class DistanceField {
 public:
  DistanceField() = default;
  DistanceField(const Configuration& c, Position src) : w_(c.size()) {
    if (!c.is_node(src)) throw Error(ErrorCode::NotANode, to_string(src));
    const int side = w_ + 1;
    d_.assign(static_cast<std::size_t>(side) * side, -1);
    std::vector<int> queue;
    queue.reserve(d_.size());
    d_[c.index(src)] = 0;
    queue.push_back(c.index(src));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int cur = queue[head];
      const Position p = c.at(cur);
      for (auto dir : kDirs) {
        const Position q = p + dir;
        if (!c.is_node(q)) continue;
        const int qi = c.index(q);
        if (d_[qi] >= 0) continue;
        d_[qi] = d_[cur] + 1;
        queue.push_back(qi);
      }
    }
  }

  int operator()(Position p) const {
    if (p.x < 0 || p.y < 0 || p.x > w_ || p.y > w_) return -1;
    return d_[p.y * (w_ + 1) + p.x];
  }
  int at_index(int i) const { return d_[i]; }

 private:
  int w_ = 0;
  std::vector<int> d_;
};

// Result of validate(): exactly one of config / rejection is set.
struct ValidationResult {
  std::optional<Configuration> config;
  std::optional<RejectionReport> rejection;
  explicit operator bool() const noexcept { return config.has_value(); }
};

inline ValidationResult validate(int w, const std::vector<Position>& holes) {
  if (w < 1) throw Error(ErrorCode::PreconditionViolated, "size must be >= 1");
  for (auto h : holes) {
    if (h.x < 1 || h.y < 1 || h.x > w - 1 || h.y > w - 1)
      return {std::nullopt, RejectionReport{Rejection::BoundaryHole, h,
                                            "hole " + to_string(h) + " is not strictly inside the square"}};
  }
  Configuration c = Configuration::unchecked(w, holes);
  if (static_cast<long>(c.k()) > static_cast<long>(w - 1) * (w - 1))
    return {std::nullopt, RejectionReport{Rejection::TooManyHoles, c.holes().front(), "more holes than interior cells"}};
  DistanceField d(c, kGeneral);
  int reached = 0;
  std::optional<Position> stray;
  for (int i = 0; i < c.cells(); ++i) {
    if (d.at_index(i) >= 0) {
      ++reached;
    } else if (!c.is_hole(c.at(i)) && !stray) {
      stray = c.at(i);
    }
  }
  if (reached != c.cells() - c.k())
    return {std::nullopt, RejectionReport{Rejection::Disconnected, *stray,
                                          "node " + to_string(*stray) + " unreachable from the general"}};
  return {std::move(c), std::nullopt};
}

inline Configuration validated(int w, const std::vector<Position>& holes) {
  auto r = validate(w, holes);
  if (!r) throw Error(ErrorCode::InvalidInput, r.rejection->message);
  return std::move(*r.config);
}

inline int bfs_distance(const Configuration& c, Position a, Position b) {
  if (!c.is_node(b)) throw Error(ErrorCode::NotANode, to_string(b));
  int d = DistanceField(c, a)(b);
  if (d < 0) throw Error(ErrorCode::Unreachable, to_string(a) + " -> " + to_string(b));
  return d;
}

inline int via_distance(const Configuration& c, Position a, Position mid, Position b) {
  return bfs_distance(c, a, mid) + bfs_distance(c, mid, b);
}

inline BoundaryCondition boundary_condition(const Configuration& c, Position v) {
  if (!c.is_node(v)) throw Error(ErrorCode::NotANode, to_string(v));
  BoundaryCondition b{};
  for (int i = 0; i < 4; ++i) b[i] = c.is_node(v + kDirs[i]) ? 1 : 0;
  return b;
}

// ---- patterns ----

enum class Label : std::uint8_t { Node, Hole };

struct Pattern {
  std::map<Position, Label> assignments;
  friend bool operator==(const Pattern&, const Pattern&) = default;
  bool empty() const { return assignments.empty(); }
};

using Region = std::vector<Position>;

inline Pattern pattern_of(const Configuration& c, const Region& region) {
  Pattern p;
  for (auto q : region) {
    if (!c.in_square(q)) throw Error(ErrorCode::OutOfSquare, to_string(q));
    p.assignments[q] = c.is_hole(q) ? Label::Hole : Label::Node;
  }
  return p;
}

inline bool has_pattern(const Configuration& c, const Pattern& pi) {
  for (const auto& [q, label] : pi.assignments) {
    if (!c.in_square(q)) return false;
    if (c.is_hole(q) != (label == Label::Hole)) return false;
  }
  return true;
}

// Restriction of a pattern to positions accepted by pred.
template <typename Pred>
Pattern restrict(const Pattern& p, Pred pred) {
  Pattern out;
  for (const auto& [q, l] : p.assignments)
    if (pred(q)) out.assignments.emplace(q, l);
  return out;
}

// ---- regions ----

enum class HalfPlane { H0, H1, H2 };

inline const char* to_string(HalfPlane h) {
  switch (h) {
    case HalfPlane::H0: return "H0";
    case HalfPlane::H1: return "H1";
    case HalfPlane::H2: return "H2";
  }
  return "?";
}

inline constexpr std::array<HalfPlane, 3> kHalfPlanes{HalfPlane::H0, HalfPlane::H1, HalfPlane::H2};

inline bool in_half_plane(int w, HalfPlane h, Position p) {
  switch (h) {
    case HalfPlane::H0: return p.x + p.y <= w + 1;
    case HalfPlane::H1: return p.x <= w / 2 + 1;
    case HalfPlane::H2: return p.y <= w / 2 + 1;
  }
  return false;
}

// The node whose firing the half-plane pattern pins down.
inline Position witness_corner(int w, HalfPlane h) {
  switch (h) {
    case HalfPlane::H0: return {0, 0};
    case HalfPlane::H1: return {0, w};
    case HalfPlane::H2: return {w, 0};
  }
  return {0, 0};
}

enum class Zone { U, V, W, X };

inline const char* to_string(Zone z) {
  switch (z) {
    case Zone::U: return "U";
    case Zone::V: return "V";
    case Zone::W: return "W";
    case Zone::X: return "X";
  }
  return "?";
}

// Closed-form zone of a position of S_w (w >= 2).
inline Zone zone_of(int w, Position p) {
  const int f = w / 2;
  if (p.x <= f - 1 && p.y <= f - 1) return Zone::U;
  if (p.x <= f && p.y <= f) return Zone::V;
  if (w % 2 == 0) {
    if ((p.y == f + 1 && p.x <= f) || (p.x == f + 1 && p.y <= f)) return Zone::W;
  } else if (p.x <= f + 1 && p.y <= f + 1) {
    return Zone::W;
  }
  return Zone::X;
}

struct RegionFamily {
  int w = 0;
  Region U, V, W, X, H0, H1, H2;
  Position v_cnt;

  const Region& half(HalfPlane h) const {
    return h == HalfPlane::H0 ? H0 : h == HalfPlane::H1 ? H1 : H2;
  }
};

inline RegionFamily regions(int w) {
  if (w < 2) throw Error(ErrorCode::PreconditionViolated, "regions need w >= 2");
  RegionFamily r;
  r.w = w;
  r.v_cnt = {w / 2, w / 2};
  for (int y = 0; y <= w; ++y) {
    for (int x = 0; x <= w; ++x) {
      const Position p{x, y};
      switch (zone_of(w, p)) {
        case Zone::U: r.U.push_back(p); break;
        case Zone::V: r.V.push_back(p); break;
        case Zone::W: r.W.push_back(p); break;
        case Zone::X: r.X.push_back(p); break;
      }
      if (in_half_plane(w, HalfPlane::H0, p)) r.H0.push_back(p);
      if (in_half_plane(w, HalfPlane::H1, p)) r.H1.push_back(p);
      if (in_half_plane(w, HalfPlane::H2, p)) r.H2.push_back(p);
    }
  }
  return r;
}

// Convenience: all positions of a square whose zone is in the given list.
inline Region zone_union(int w, std::initializer_list<Zone> zs) {
  Region out;
  for (int y = 0; y <= w; ++y)
    for (int x = 0; x <= w; ++x) {
      const Zone z = zone_of(w, {x, y});
      if (std::find(zs.begin(), zs.end(), z) != zs.end()) out.push_back({x, y});
    }
  return out;
}

}  // namespace fssp
