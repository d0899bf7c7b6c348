#pragma once

#include <memory>

#include "message_plan.hpp"

namespace fssp {

// Hole counts per zone plus the refinements the upper-bound case split uses.
// The W refinement excludes the far corner v_cnt+(1,1) (in W only for odd w);
// the V refinement excludes v_cnt itself.
struct HoleTypeProfile {
  int nU = 0, nV = 0, nW = 0, nX = 0;
  int w_critical = 0, w_noncritical = 0, w_corner = 0;
  int v_critical = 0, v_noncritical = 0, v_center = 0;

  friend bool operator==(const HoleTypeProfile&, const HoleTypeProfile&) = default;
};

inline HoleTypeProfile type_of(const Configuration& c) {
  if (c.k() != 2) throw Error(ErrorCode::WrongHoleCount, "expected 2 holes, got " + std::to_string(c.k()));
  const int w = c.size();
  const Position cnt{w / 2, w / 2};
  HoleTypeProfile t;
  for (auto h : c.holes()) {
    switch (zone_of(w, h)) {
      case Zone::U: ++t.nU; break;
      case Zone::V:
        ++t.nV;
        if (h == cnt) ++t.v_center;
        else if (is_critical(h)) ++t.v_critical;
        else ++t.v_noncritical;
        break;
      case Zone::W:
        ++t.nW;
        if (h == cnt + Position{1, 1}) ++t.w_corner;
        else if (is_critical(h)) ++t.w_critical;
        else ++t.w_noncritical;
        break;
      case Zone::X: ++t.nX; break;
    }
  }
  return t;
}

// The three conditions under which the minimum firing time is 2w+1.
inline bool needs_extra_step(const Configuration& c) {
  const auto t = type_of(c);
  const int w = c.size();
  if (t.nU + t.nV + t.nW == 0) return true;
  if (t.nU + t.nV == 0 && t.nW == 1 && t.w_critical == 1) return true;
  return has_critical_pair_where(c, [w](Position h) { return zone_of(w, h) != Zone::X; });
}

// ---- witness plans ----

namespace detail {

inline Position transpose(Position p) { return {p.y, p.x}; }

inline Configuration transpose(const Configuration& c) {
  std::vector<Position> hs;
  for (auto h : c.holes()) hs.push_back(transpose(h));
  return Configuration::unchecked(c.size(), hs);
}

inline Pattern transpose(const Pattern& p) {
  Pattern out;
  for (const auto& [q, l] : p.assignments) out.assignments[transpose(q)] = l;
  return out;
}

inline MessagePlan transpose(const MessagePlan& plan) {
  MessagePlan out = plan;
  for (auto& q : out.checked_region) q = transpose(q);
  std::sort(out.checked_region.begin(), out.checked_region.end());
  out.pattern = transpose(plan.pattern);
  for (auto& g : out.groups)
    for (auto& m : g) {
      m.site = transpose(m.site);
      if (m.pattern) m.pattern = transpose(*m.pattern);
    }
  return out;
}

inline MessagePlan plan_over(const Configuration& c, Region z, std::vector<std::vector<Position>> sites) {
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  MessagePlan p;
  p.target_size = c.size();
  p.pattern = pattern_of(c, z);
  p.checked_region = std::move(z);
  for (const auto& g : sites) {
    std::vector<MessageSite> group;
    for (auto s : g) group.push_back({s, 0, std::nullopt});
    p.groups.push_back(std::move(group));
  }
  return p;
}

inline Region without(Region r, Position p) {
  r.erase(std::remove(r.begin(), r.end(), p), r.end());
  return r;
}

// M00 or (M10 and M11); the second group splits the pattern along x <= lim
// and y <= lim.
inline MessagePlan three_message_plan(const Configuration& c, Region z, Position s00, Position s10,
                                      Position s11, int lim) {
  auto p = plan_over(c, std::move(z), {{s00}, {s10, s11}});
  p.groups[1][0].pattern = restrict(p.pattern, [lim](Position q) { return q.x <= lim; });
  p.groups[1][1].pattern = restrict(p.pattern, [lim](Position q) { return q.y <= lim; });
  return p;
}

}  // namespace detail

// Which branch of the upper-bound case split produced a plan.
struct WitnessPlan {
  std::string case_label;
  MessagePlan plan;
};

inline WitnessPlan build_witness_plan(const Configuration& c) {
  if (c.k() != 2) throw Error(ErrorCode::WrongHoleCount, "expected 2 holes, got " + std::to_string(c.k()));
  const int w = c.size();
  if (w < 5) throw Error(ErrorCode::SizeTooSmall, "upper-bound plans need w >= 5");
  if (needs_extra_step(c)) throw Error(ErrorCode::NotUpperBoundCase, "configuration needs 2w+1");
  using detail::plan_over;
  using detail::without;
  const auto t = type_of(c);
  const int f = w / 2;
  const Position cnt{f, f};
  const Position e{1, 0}, n{0, 1};
  const Region UV = zone_union(w, {Zone::U, Zone::V});
  const Region UVW = zone_union(w, {Zone::U, Zone::V, Zone::W});
  const Region UVWp = without(UVW, cnt + Position{1, 1});

  if (t.nU >= 1 && t.nV == 0) return {"1", plan_over(c, UV, {{cnt}})};

  if (t.nU == 0 && t.nV == 0) {
    if (c.is_hole(cnt + n) && c.is_hole(cnt + e))
      return {"2.2", detail::three_message_plan(c, UVWp, cnt, cnt + Position{-1, 1}, cnt + Position{1, -1}, f)};
    if (w % 2 == 0) return {"2.1.1", plan_over(c, UVW, {{cnt}})};
    if (t.w_corner == 1 && t.w_noncritical == 0)  // (1,0,1) and (0,0,1)
      return {t.w_critical ? "2.1.2.2" : "2.1.2.3", plan_over(c, UVW, {{cnt + n}, {cnt + e}})};
    return {"2.1.2.1", plan_over(c, UVWp, {{cnt}})};
  }

  if (t.nU == 0) {  // at least one hole in V
    const Position inner = cnt - Position{1, 1};
    if (c.is_hole(cnt - e) && c.is_hole(cnt - n))
      return {"3.2", detail::three_message_plan(c, UV, inner, cnt + Position{-2, 0}, cnt + Position{0, -2}, f - 1)};
    if (t.v_center == 1 && t.v_noncritical == 0)  // (1,0,1) and (0,0,1)
      return {"3.1", plan_over(c, UV, {{cnt - e}, {cnt - n}})};
    if (t.v_critical == 1 && t.v_noncritical == 0 && t.v_center == 0) {  // (1,0,0)
      if (c.is_hole(cnt + Position{-2, 0}))
        return {"3.1", plan_over(c, [&] { auto z = UV; z.push_back(cnt + Position{-1, 1}); return z; }(), {{cnt - e}})};
      return {"3.1", plan_over(c, [&] { auto z = UV; z.push_back(cnt + Position{1, -1}); return z; }(), {{cnt - n}})};
    }
    return {"3.1", plan_over(c, without(UV, cnt), {{inner}})};
  }

  // type (1,1,0,0); work with the V hole on the horizontal arm
  Position v0{}, v1{};
  for (auto h : c.holes()) (zone_of(w, h) == Zone::U ? v0 : v1) = h;
  if (v1.y != f) {
    auto wp = build_witness_plan(detail::transpose(c));
    wp.plan = detail::transpose(wp.plan);
    return wp;
  }
  if (!(v1 == v0 + Position{1, 1})) return {"4.1", plan_over(c, UV, {{v0 - n, v1 - e}})};
  return {"4.2", plan_over(c, UV, {{v0 + e}, {v1 - e}})};
}

// ---- classifier ----

struct MftVerdict {
  int value = 0;
  std::optional<CertificateChain> chain;  // for 2w+1
  std::optional<WitnessPlan> witness;     // for 2w
  std::optional<CConditionReport> report;
  SearchOutcome search = SearchOutcome::Found;
};

// Decides the minimum firing time from the three conditions and attaches a
// certificate. A prover for the configuration's size can be shared across
// calls; otherwise one is built on demand.
inline MftVerdict classify(const Configuration& c, const CertificateProver* prover = nullptr) {
  if (c.k() != 2) throw Error(ErrorCode::WrongHoleCount, "expected 2 holes, got " + std::to_string(c.k()));
  const int w = c.size();
  if (w < 11) throw Error(ErrorCode::SizeTooSmall, "classifier needs w >= 11");
  MftVerdict v;
  if (needs_extra_step(c)) {
    v.value = 2 * w + 1;
    std::unique_ptr<CertificateProver> own;
    if (!prover || prover->size() != w) {
      if (has_critical_pair(c)) {
        v.chain = CertificateChain{c, {}, c};
        return v;
      }
      own = std::make_unique<CertificateProver>(w);
      prover = own.get();
    }
    auto r = prover->prove(c);
    v.search = r.outcome;
    v.chain = r.chain;
    return v;
  }
  v.value = 2 * w;
  v.witness = build_witness_plan(c);
  v.report = check_c_conditions(v.witness->plan, c);
  return v;
}

// ---- distance bound with four exceptions ----

enum class AppendixVerdict { Holds, Exception1, Exception2, Exception3, Exception4, Unexplained };

inline const char* to_string(AppendixVerdict a) {
  switch (a) {
    case AppendixVerdict::Holds: return "Holds";
    case AppendixVerdict::Exception1: return "Exception1";
    case AppendixVerdict::Exception2: return "Exception2";
    case AppendixVerdict::Exception3: return "Exception3";
    case AppendixVerdict::Exception4: return "Exception4";
    case AppendixVerdict::Unexplained: return "Unexplained";
  }
  return "?";
}

// Pattern side only: which listed exception the triple (C, v, v') matches.
inline std::optional<AppendixVerdict> appendix_exception(const Configuration& c, Position v, Position vp) {
  const int w = c.size();
  const int f = w / 2;
  const bool even = w % 2 == 0;
  auto holes_at = [&](Position a, Position b) { return c.is_hole(a) && c.is_hole(b); };
  auto one_of = [&](std::initializer_list<Position> ps) {
    for (auto p : ps)
      if (p == vp) return true;
    return false;
  };
  const Position e{1, 0}, n{0, 1};
  if (holes_at(v + n, v + e) && one_of({{w - 1, w}, {w, w - 1}, {w, w}})) return AppendixVerdict::Exception1;
  if (v.x == f && holes_at(v - e, v + n) &&
      (even ? one_of({{0, w - 1}, {1, w}, {0, w}}) : vp == Position{0, w}))
    return AppendixVerdict::Exception2;
  if (v.y == f && holes_at(v - n, v + e) &&
      (even ? one_of({{w - 1, 0}, {w, 1}, {w, 0}}) : vp == Position{w, 0}))
    return AppendixVerdict::Exception3;
  if (even && v.x == f && v.y == f && holes_at(v - n, v - e) && one_of({{1, 0}, {0, 1}, {0, 0}}))
    return AppendixVerdict::Exception4;
  return std::nullopt;
}

inline void appendix_preconditions(const Configuration& c, Position v, Position vp) {
  const int w = c.size();
  if (w < 5 || c.k() != 2 || !c.is_node(v) || !c.is_node(vp))
    throw Error(ErrorCode::PreconditionViolated, "need w >= 5, two holes and two nodes");
  const Zone z = zone_of(w, v);
  if (z != Zone::U && z != Zone::V) throw Error(ErrorCode::PreconditionViolated, "v must lie in U or V");
}

// Holds when mh(general, v) + d(v, v') <= 2w; otherwise the exception the
// violation falls under, or Unexplained.
inline AppendixVerdict thm_appendix_check(const Configuration& c, Position v, Position vp) {
  appendix_preconditions(c, v, vp);
  if (mh_distance(kGeneral, v) + bfs_distance(c, v, vp) <= 2 * c.size()) return AppendixVerdict::Holds;
  return appendix_exception(c, v, vp).value_or(AppendixVerdict::Unexplained);
}

}  // namespace fssp
