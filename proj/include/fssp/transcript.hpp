#pragma once

#include <map>
#include <optional>

#include "grid.hpp"

namespace fssp {

// Which node fired when. A node that never fired within the horizon maps to
// nullopt.
struct FiringTranscript {
  std::map<Position, std::optional<int>> fire_time;
  int horizon = 0;

  // Common firing time when every node fired at the same step.
  std::optional<int> simultaneous() const {
    std::optional<int> t;
    for (const auto& [p, ft] : fire_time) {
      if (!ft) return std::nullopt;
      if (t && *t != *ft) return std::nullopt;
      t = ft;
    }
    return t;
  }
  std::optional<int> first_fire() const {
    std::optional<int> t;
    for (const auto& [p, ft] : fire_time)
      if (ft && (!t || *ft < *t)) t = ft;
    return t;
  }
  bool none_fired() const { return !first_fire().has_value(); }
};

}  // namespace fssp
