#pragma once

#include <string>

#include "timebounds.hpp"
#include "transcript.hpp"

namespace fssp {

// One message of a plan. It is generated at `site` at time
// mh_distance(general, site) + offset when the configuration has `pattern`
// (the plan pattern when unset).
struct MessageSite {
  Position site;
  int offset = 0;
  std::optional<Pattern> pattern;
};

// Partial solution built from size-check messages. Fires at
// 2*target_size + slack on (W0 or W1) and (some group fully received).
// An empty group list leaves only the size check.
struct MessagePlan {
  int target_size = 0;
  int slack = 0;
  Region checked_region;
  std::vector<std::vector<MessageSite>> groups;
  Pattern pattern;

  int fire_time() const { return 2 * target_size + slack; }
  const Pattern& pattern_of(const MessageSite& m) const { return m.pattern ? *m.pattern : pattern; }
};

// Generated-at time of one message, or nullopt when C does not generate it.
inline std::optional<int> message_birth(const Configuration& c, const MessagePlan& plan, const MessageSite& m) {
  if (c.size() != plan.target_size) return std::nullopt;
  if (!c.is_node(m.site)) return std::nullopt;
  if (!has_pattern(c, plan.pattern_of(m))) return std::nullopt;
  return mh_distance(kGeneral, m.site) + m.offset;
}

namespace detail {

// Time-stepped flooding. arrival[i] is the step at which the message reached
// node i, -1 when it never did within the horizon.
inline std::vector<int> flood(const Configuration& c, const std::vector<std::pair<Position, int>>& sources,
                              int horizon) {
  std::vector<int> arrival(c.cells(), -1);
  std::vector<int> frontier;
  for (int t = 0; t <= horizon; ++t) {
    std::vector<int> next;
    for (int i : frontier)
      for (auto d : kDirs) {
        const Position q = c.at(i) + d;
        if (c.is_node(q) && arrival[c.index(q)] < 0) {
          arrival[c.index(q)] = t;
          next.push_back(c.index(q));
        }
      }
    for (const auto& [p, birth] : sources)
      if (birth == t && arrival[c.index(p)] < 0) {
        arrival[c.index(p)] = t;
        next.push_back(c.index(p));
      }
    frontier = std::move(next);
  }
  return arrival;
}

}  // namespace detail

// Message-timing simulation of a plan on C. Every node is evaluated only at
// the plan's firing step, which is the only step at which it may fire.
inline FiringTranscript run_message_plan(const Configuration& c, const MessagePlan& plan) {
  FiringTranscript tr;
  const int tf = plan.fire_time();
  tr.horizon = tf;
  const int w = c.size();

  std::vector<std::pair<Position, int>> size_src;
  if (w == plan.target_size) size_src = {{{0, w}, w}, {{w, 0}, w}};
  const auto size_arrival = detail::flood(c, size_src, tf);

  std::vector<std::vector<std::vector<int>>> arrivals(plan.groups.size());
  for (std::size_t g = 0; g < plan.groups.size(); ++g)
    for (const auto& m : plan.groups[g]) {
      std::vector<std::pair<Position, int>> src;
      if (auto b = message_birth(c, plan, m)) src.push_back({m.site, *b});
      arrivals[g].push_back(detail::flood(c, src, tf));
    }

  for (auto p : c.nodes()) {
    const int i = c.index(p);
    bool fires = size_arrival[i] >= 0;
    if (fires && !plan.groups.empty()) {
      bool any = false;
      for (const auto& group : arrivals) {
        bool all = true;
        for (const auto& arr : group) all = all && arr[i] >= 0;
        any = any || all;
      }
      fires = any;
    }
    tr.fire_time[p] = fires ? std::optional<int>(tf) : std::nullopt;
  }
  return tr;
}

// D_{i,j}(C, v) for every v: generation time plus BFS distance.
inline std::vector<int> message_reach(const Configuration& c, const MessageSite& m) {
  const DistanceField d(c, m.site);
  std::vector<int> out(c.cells(), -1);
  const int birth = mh_distance(kGeneral, m.site) + m.offset;
  for (int i = 0; i < c.cells(); ++i)
    if (d.at_index(i) >= 0) out[i] = birth + d.at_index(i);
  return out;
}

// All valid configurations of size w with k holes that have the pattern.
template <typename Fn>
void for_each_completion(int w, int k, const Pattern& pi, Fn&& fn) {
  std::vector<Position> forced, free;
  for (const auto& [p, l] : pi.assignments)
    if (l == Label::Hole) forced.push_back(p);
  if (static_cast<int>(forced.size()) > k) return;
  for (int y = 1; y < w; ++y)
    for (int x = 1; x < w; ++x)
      if (!pi.assignments.count({x, y})) free.push_back({x, y});
  const int need = k - static_cast<int>(forced.size());
  if (need > static_cast<int>(free.size())) return;
  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i) pick[i] = i;
  const int n = static_cast<int>(free.size());
  while (true) {
    std::vector<Position> hs = forced;
    for (int i : pick) hs.push_back(free[i]);
    if (auto v = validate(w, hs)) fn(*v.config);
    int i = need - 1;
    while (i >= 0 && pick[i] == n - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
}

struct CConditionReport {
  bool c1 = true, c2 = true, c5 = true, sites_ok = true;
  long completions = 0;
  std::vector<Position> c5_failures;  // nodes of the reference configuration
  long c5_domain_failures = 0;        // (configuration, node) pairs over the whole domain
  std::vector<std::string> notes;

  bool ok() const { return c1 && c2 && c5 && sites_ok; }
};

// Checks C1, C2 and C5 by enumerating every configuration of the plan's size
// with ref.k() holes that has the plan pattern. C5 is checked on all of them,
// not only on ref, because the plan fires the whole domain.
inline CConditionReport check_c_conditions(const MessagePlan& plan, const Configuration& ref) {
  CConditionReport rep;
  const int w = plan.target_size;
  const int budget = plan.fire_time();
  if (ref.size() != w) {
    rep.sites_ok = false;
    rep.notes.push_back("reference configuration has the wrong size");
    return rep;
  }
  if (!has_pattern(ref, plan.pattern)) {
    rep.sites_ok = false;
    rep.notes.push_back("reference configuration lacks the plan pattern");
  }
  for (const auto& g : plan.groups)
    for (const auto& m : g) {
      auto it = plan.pattern.assignments.find(m.site);
      const bool hole_in_pattern = it != plan.pattern.assignments.end() && it->second == Label::Hole;
      if (m.offset < 0 || !ref.is_node(m.site) || hole_in_pattern) {
        rep.sites_ok = false;
        rep.notes.push_back("bad site " + to_string(m.site));
      }
      for (const auto& [p, l] : plan.pattern_of(m).assignments) {
        auto jt = plan.pattern.assignments.find(p);
        if (jt == plan.pattern.assignments.end() || jt->second != l) {
          rep.c2 = false;
          rep.notes.push_back("message pattern at " + to_string(m.site) + " leaves the plan pattern");
          break;
        }
      }
    }

  // C2, "if" direction: having every message pattern of a group forces the
  // plan pattern.
  for (std::size_t g = 0; g < plan.groups.size() && rep.c2; ++g) {
    Pattern joint;
    for (const auto& m : plan.groups[g])
      for (const auto& [p, l] : plan.pattern_of(m).assignments) joint.assignments[p] = l;
    for_each_completion(w, ref.k(), joint, [&](const Configuration& c) {
      if (!has_pattern(c, plan.pattern)) rep.c2 = false;
    });
    if (!rep.c2) rep.notes.push_back("group " + std::to_string(g) + " does not pin down the plan pattern");
  }

  for_each_completion(w, ref.k(), plan.pattern, [&](const Configuration& c) {
    ++rep.completions;
    if (max_t(c) > budget) rep.c1 = false;
    if (plan.groups.empty()) return;
    std::vector<std::vector<std::vector<int>>> reach(plan.groups.size());
    for (std::size_t g = 0; g < plan.groups.size(); ++g)
      for (const auto& m : plan.groups[g]) reach[g].push_back(message_reach(c, m));
    for (auto v : c.nodes()) {
      const int i = c.index(v);
      bool covered = false;
      for (const auto& group : reach) {
        bool all = true;
        for (const auto& r : group) all = all && r[i] >= 0 && r[i] <= budget;
        covered = covered || all;
      }
      if (!covered) {
        ++rep.c5_domain_failures;
        if (c == ref) rep.c5_failures.push_back(v);
      }
    }
  });
  if (rep.c5_domain_failures > 0) rep.c5 = false;
  if (rep.completions == 0) {
    rep.c1 = false;
    rep.notes.push_back("pattern has no completion");
  }
  return rep;
}

}  // namespace fssp
