#pragma once

#include <limits>

#include "barriers.hpp"
#include "grid.hpp"

namespace fssp {

// T(v, C) for every node: the shorter of the two corner detours
// gen -> (0,w) -> v and gen -> (w,0) -> v. -1 on holes.
class TField {
 public:
  explicit TField(const Configuration& c) : c_(&c) {
    const int w = c.size();
    DistanceField from_nw(c, {0, w}), from_se(c, {w, 0});
    const int to_nw = from_nw(kGeneral), to_se = from_se(kGeneral);
    t_.assign(c.cells(), -1);
    for (int i = 0; i < c.cells(); ++i) {
      const int a = from_nw.at_index(i), b = from_se.at_index(i);
      if (a < 0) continue;
      t_[i] = std::min(to_nw + a, to_se + b);
      max_ = std::max(max_, t_[i]);
    }
  }
  int operator()(Position v) const {
    if (!c_->is_node(v)) throw Error(ErrorCode::NotANode, to_string(v));
    return t_[c_->index(v)];
  }
  int max() const noexcept { return max_; }

 private:
  const Configuration* c_;
  std::vector<int> t_;
  int max_ = 0;
};

inline int t_of(const Configuration& c, Position v) {
  const int w = c.size();
  return std::min(via_distance(c, kGeneral, {0, w}, v), via_distance(c, kGeneral, {w, 0}, v));
}

inline int max_t(const Configuration& c) { return TField(c).max(); }

// The barrier formula. W, H, z, delta come from the maximal barrier holding
// v; d0, d1 are shortest paths inside the enlarged rectangle only.
struct BarrierFormulaTerms {
  Rect barrier;
  int W, H, delta, d0, d1, t;
};

inline int bfs_in_rect(const Configuration& c, const Rect& box, Position src, Position dst) {
  if (!box.contains(src) || !box.contains(dst) || !c.is_node(src) || !c.is_node(dst)) return -1;
  const int bw = box.width(), bh = box.height();
  std::vector<int> dist(static_cast<std::size_t>(bw) * bh, -1);
  auto idx = [&](Position p) { return (p.y - box.y0) * bw + (p.x - box.x0); };
  std::vector<Position> queue{src};
  dist[idx(src)] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Position p = queue[h];
    if (p == dst) return dist[idx(p)];
    for (auto d : kDirs) {
      const Position q = p + d;
      if (!box.contains(q) || !c.is_node(q) || dist[idx(q)] >= 0) continue;
      dist[idx(q)] = dist[idx(p)] + 1;
      queue.push_back(q);
    }
  }
  return dist[idx(dst)];
}

inline BarrierFormulaTerms t_formula_terms(const Configuration& c, Position v,
                                           const std::vector<Rect>& bars) {
  if (!c.is_node(v)) throw Error(ErrorCode::NotANode, to_string(v));
  auto r = containing_barrier(bars, v);
  if (!r) throw Error(ErrorCode::NotInBarrier, to_string(v));
  BarrierFormulaTerms t{};
  t.barrier = *r;
  t.W = r->width();
  t.H = r->height();
  const Position z = r->sw();
  t.delta = z.x - z.y;
  const Rect X{r->x0 - 1, r->y0 - 1, r->x1 + 1, r->y1 + 1};
  t.d0 = bfs_in_rect(c, X, z + Position{-1, t.H}, v);
  t.d1 = bfs_in_rect(c, X, z + Position{t.W, -1}, v);
  if (t.d0 < 0 || t.d1 < 0) throw Error(ErrorCode::Unreachable, "inside enlarged rectangle: " + to_string(v));
  t.t = 2 * c.size() + std::min(t.delta - t.H - 1 + t.d0, -t.delta - t.W - 1 + t.d1);
  return t;
}

inline int t_formula(const Configuration& c, Position v) {
  return t_formula_terms(c, v, maximal_barriers(c)).t;
}

// ---- critical holes ----

inline bool is_critical(Position h) { return std::abs(h.x - h.y) == 2; }

inline std::vector<Position> critical_holes(const Configuration& c) {
  std::vector<Position> out;
  for (auto h : c.holes())
    if (is_critical(h)) out.push_back(h);
  return out;
}

inline bool is_critical_pair(Position a, Position b) {
  return is_critical(a) && is_critical(b) && (b == a + Position{1, 1} || a == b + Position{1, 1});
}

template <typename Pred>
bool has_critical_pair_where(const Configuration& c, Pred pred) {
  const auto& hs = c.holes();
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      if (pred(hs[i]) && pred(hs[j]) && is_critical_pair(hs[i], hs[j])) return true;
  return false;
}

inline bool has_critical_pair(const Configuration& c) {
  return has_critical_pair_where(c, [](Position) { return true; });
}

struct CriticalPairCheck {
  int w = 0;
  int max_t = 0;
  bool has_critical_pair = false;
  bool max_is_2w_plus_1() const { return max_t == 2 * w + 1; }
  bool in_range() const { return max_t == 2 * w || max_t == 2 * w + 1; }
  bool agrees() const { return in_range() && max_is_2w_plus_1() == has_critical_pair; }
};

inline CriticalPairCheck critical_pair_theorem_check(const Configuration& c) {
  if (c.k() != 2) throw Error(ErrorCode::WrongHoleCount, "expected 2 holes, got " + std::to_string(c.k()));
  return {c.size(), max_t(c), has_critical_pair(c)};
}

// ---- the primed equivalence ----

namespace detail {

// Every node u of a with d(gen,u) + d(u,v) <= t must be a node of b with the
// same boundary condition.
inline bool equiv_one_way(const Configuration& a, const Configuration& b, int t, Position v) {
  DistanceField from_gen(a, kGeneral), from_v(a, v);
  for (int i = 0; i < a.cells(); ++i) {
    const int g = from_gen.at_index(i), h = from_v.at_index(i);
    if (g < 0 || h < 0 || g + h > t) continue;
    const Position u = a.at(i);
    if (!b.is_node(u)) return false;
    if (boundary_condition(a, u) != boundary_condition(b, u)) return false;
  }
  return true;
}

}  // namespace detail

inline bool equiv_prime(const Configuration& a, const Configuration& b, int t, Position v) {
  if (!a.is_node(v) || !b.is_node(v)) throw Error(ErrorCode::NotANode, to_string(v));
  return detail::equiv_one_way(a, b, t, v) && detail::equiv_one_way(b, a, t, v);
}

inline bool pattern_move_equiv(const Configuration& a, const Configuration& b, HalfPlane h) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "pattern comparison across sizes");
  const int w = a.size();
  for (int y = 0; y <= w; ++y)
    for (int x = 0; x <= w; ++x) {
      const Position p{x, y};
      if (in_half_plane(w, h, p) && a.is_hole(p) != b.is_hole(p)) return false;
    }
  return true;
}

// ---- lower-bound certificates ----

struct CertificateStep {
  HalfPlane half_plane;
  Position from;
  Position to;
};

struct CertificateChain {
  Configuration initial;
  std::vector<CertificateStep> steps;
  Configuration final;
};

enum class SearchOutcome { Found, NotFoundExhausted, NotFoundDepthCap };

inline const char* to_string(SearchOutcome s) {
  switch (s) {
    case SearchOutcome::Found: return "FOUND";
    case SearchOutcome::NotFoundExhausted: return "NOT_FOUND_EXHAUSTED";
    case SearchOutcome::NotFoundDepthCap: return "NOT_FOUND_DEPTH_CAP";
  }
  return "?";
}

struct CertificateResult {
  SearchOutcome outcome = SearchOutcome::NotFoundExhausted;
  std::optional<CertificateChain> chain;
};

// Breadth-first search over unordered two-hole configurations of one size.
// The move graph is undirected (a relocation outside H_i can be undone
// outside H_i), so one multi-source search from all critical-pair states
// answers every query of that size with a shortest chain.
class CertificateProver {
 public:
  static constexpr int kDepthCap = 64;

  explicit CertificateProver(int w) : w_(w), n_((w - 1) * (w - 1)) {
    if (w < 3) throw Error(ErrorCode::PreconditionViolated, "need interior cells for two holes");
    const int states = n_ * n_;
    valid_.assign(states, 0);
    dist_.assign(states, -1);
    next_.assign(states, -1);
    step_.assign(states, CertificateStep{});
    std::vector<int> queue;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        const int s = a * n_ + b;
        valid_[s] = validate(w_, {cell(a), cell(b)}) ? 1 : 0;
        if (valid_[s] && is_critical_pair(cell(a), cell(b))) {
          dist_[s] = 0;
          queue.push_back(s);
        }
      }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int s = queue[h];
      const int a = s / n_, b = s % n_;
      for (int which = 0; which < 2; ++which) {
        const int moved = which == 0 ? a : b, kept = which == 0 ? b : a;
        for (int to = 0; to < n_; ++to) {
          if (to == moved || to == kept) continue;
          auto hp = shared_outside(cell(moved), cell(to));
          if (!hp) continue;
          const int t = key(to, kept);
          if (!valid_[t] || dist_[t] >= 0) continue;
          dist_[t] = dist_[s] + 1;
          next_[t] = s;
          // Walking from t towards the goal moves the hole at `to` back to `moved`.
          step_[t] = CertificateStep{*hp, cell(to), cell(moved)};
          queue.push_back(t);
        }
      }
    }
  }

  int size() const noexcept { return w_; }

  // Distance to the goal set, or -1 when no chain exists.
  int distance(const Configuration& c) const { return dist_[state_of(c)]; }

  CertificateResult prove(const Configuration& c) const {
    int s = state_of(c);
    if (dist_[s] < 0) return {SearchOutcome::NotFoundExhausted, std::nullopt};
    if (dist_[s] > kDepthCap) return {SearchOutcome::NotFoundDepthCap, std::nullopt};
    CertificateChain chain;
    chain.initial = c;
    while (dist_[s] > 0) {
      chain.steps.push_back(step_[s]);
      s = next_[s];
    }
    chain.final = Configuration::unchecked(w_, {cell(s / n_), cell(s % n_)});
    return {SearchOutcome::Found, std::move(chain)};
  }

 private:
  Position cell(int i) const { return {1 + i % (w_ - 1), 1 + i / (w_ - 1)}; }
  int index_of(Position p) const { return (p.y - 1) * (w_ - 1) + (p.x - 1); }
  int key(int a, int b) const { return a < b ? a * n_ + b : b * n_ + a; }

  int state_of(const Configuration& c) const {
    if (c.k() != 2) throw Error(ErrorCode::WrongHoleCount, "expected 2 holes, got " + std::to_string(c.k()));
    if (c.size() != w_) throw Error(ErrorCode::SizeMismatch, "prover built for another size");
    return key(index_of(c.holes()[0]), index_of(c.holes()[1]));
  }

  std::optional<HalfPlane> shared_outside(Position a, Position b) const {
    for (auto h : kHalfPlanes)
      if (!in_half_plane(w_, h, a) && !in_half_plane(w_, h, b)) return h;
    return std::nullopt;
  }

  int w_, n_;
  std::vector<std::uint8_t> valid_;
  std::vector<int> dist_, next_;
  std::vector<CertificateStep> step_;
};

inline CertificateResult lower_bound_certificate(const Configuration& c) {
  if (c.k() != 2) throw Error(ErrorCode::WrongHoleCount, "expected 2 holes, got " + std::to_string(c.k()));
  if (has_critical_pair(c)) return {SearchOutcome::Found, CertificateChain{c, {}, c}};
  return CertificateProver(c.size()).prove(c);
}

struct CertificateCheck {
  bool ok = true;
  std::string failure;
};

// Replays a chain from its initial configuration. With check_equiv each step
// is also confirmed by equiv_prime at t = 2w at the half-plane's witness node.
inline CertificateCheck verify_certificate(const CertificateChain& chain, bool check_equiv = false) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  Configuration cur = chain.initial;
  const int w = cur.size();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& st = chain.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (!cur.is_hole(st.from)) return fail(at + "no hole at " + to_string(st.from));
    if (cur.is_hole(st.to)) return fail(at + "target already a hole");
    if (in_half_plane(w, st.half_plane, st.from) || in_half_plane(w, st.half_plane, st.to))
      return fail(at + "move touches " + std::string(to_string(st.half_plane)));
    std::vector<Position> hs;
    for (auto h : cur.holes())
      if (!(h == st.from)) hs.push_back(h);
    hs.push_back(st.to);
    auto next = validate(w, hs);
    if (!next) return fail(at + "invalid intermediate: " + next.rejection->message);
    if (!pattern_move_equiv(cur, *next.config, st.half_plane)) return fail(at + "pattern changed");
    if (check_equiv && !equiv_prime(cur, *next.config, 2 * w, witness_corner(w, st.half_plane)))
      return fail(at + "equiv_prime fails at the witness node");
    cur = std::move(*next.config);
  }
  if (!(cur == chain.final)) return fail("replay does not end at the declared final configuration");
  if (!has_critical_pair(cur)) return fail("final configuration has no critical pair");
  return {};
}

}  // namespace fssp
