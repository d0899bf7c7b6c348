#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fssp {

// Minimal-time line firing squad.
//
// Every general emits, into each open side, a fast signal (speed 1) and a
// family of slow markers of speeds 1/3, 1/7, 1/15, ... A marker of speed
// 1/(2m+1) is driven by ticks: the next faster member of its family sends a
// tick back every second cell, and the marker steps forward when a tick
// reaches the cell in front of it. A fast signal that meets the leading
// marker of the opposite family creates a new general (one cell) or a pair
// of generals (two cells), which halves the segment. A general whose two
// neighbours are generals or walls fires.
struct LineCell {
  std::uint8_t gen = 0;     // general, persistent
  std::uint8_t open_l = 0;  // general still drives a family to the west
  std::uint8_t open_r = 0;  // ... to the east
  std::uint8_t fr = 0, pfr = 0;  // east-moving fast signal, parity of its distance
  std::uint8_t fl = 0, pfl = 0;  // west-moving fast signal
  std::uint8_t mr = 0, pmr = 0;  // marker of an east family
  std::uint8_t ml = 0, pml = 0;  // marker of a west family
  std::uint8_t tr = 0;  // tick of an east family (moves west)
  std::uint8_t tl = 0;  // tick of a west family (moves east)
  std::uint8_t fired = 0;

  bool quiescent() const noexcept {
    return !(gen | fr | fl | mr | ml | tr | tl | fired);
  }
  bool east_marker() const noexcept { return mr || (gen && open_r); }
  bool west_marker() const noexcept { return ml || (gen && open_l); }
  // parity of the distance the marker will have after one more step
  std::uint8_t east_marker_next_parity() const noexcept { return mr ? !pmr : 1; }
  std::uint8_t west_marker_next_parity() const noexcept { return ml ? !pml : 1; }

  friend bool operator==(const LineCell&, const LineCell&) = default;
};

inline LineCell make_general(bool open_l, bool open_r) {
  LineCell c;
  c.gen = 1;
  if (!open_l && !open_r) {
    c.fired = 1;  // a lone cell between two walls is already synchronised
    return c;
  }
  c.open_l = open_l;
  c.open_r = open_r;
  c.fl = open_l;
  c.fr = open_r;
  return c;
}

// One synchronous step. L and R are the west/east neighbours, nullptr for a
// wall.
inline LineCell line_step(const LineCell* L, const LineCell& S, const LineCell* R) {
  if (S.fired) return S;
  if (S.gen && (!L || L->gen) && (!R || R->gen)) {
    LineCell f;
    f.gen = 1;
    f.fired = 1;
    return f;
  }

  LineCell n;
  n.gen = S.gen;
  n.open_l = S.open_l;
  n.open_r = S.open_r;

  // ticks travel one cell per step and are absorbed by the first marker
  // they reach; a marker that lands on an even distance re-emits the tick.
  if (R && R->tr && !S.east_marker()) n.tr = 1;
  if (R && R->tr && S.east_marker() && S.east_marker_next_parity() == 0) n.tr = 1;
  if (L && L->tl && !S.west_marker()) n.tl = 1;
  if (L && L->tl && S.west_marker() && S.west_marker_next_parity() == 0) n.tl = 1;
  // a fast signal leaves a tick behind when it steps onto an even distance
  if (S.fr && S.pfr) n.tr = 1;
  if (S.fl && S.pfl) n.tl = 1;

  // markers
  if (S.mr && !(R && R->tr)) n.mr = 1, n.pmr = S.pmr;
  if (L && L->east_marker() && S.tr) n.mr = 1, n.pmr = L->east_marker_next_parity();
  if (S.ml && !(L && L->tl)) n.ml = 1, n.pml = S.pml;
  if (R && R->west_marker() && S.tl) n.ml = 1, n.pml = R->west_marker_next_parity();

  // fast signals
  if (L && L->fr) n.fr = 1, n.pfr = !L->pfr;
  if (R && R->fl) n.fl = 1, n.pfl = !R->pfl;

  auto born = [&](bool open_l, bool open_r) {
    LineCell g = make_general(open_l, open_r);
    g.tr = n.tr;
    g.tl = n.tl;
    return g;
  };
  if (S.gen) {
    // a general absorbs everything except passing ticks
    n.fr = n.fl = n.mr = n.ml = 0;
    n.pfr = n.pfl = n.pmr = n.pml = 0;
    return n;
  }

  // Contact between a fast signal and the leading marker of the opposite
  // family, seen one step before the new general(s) appear. Adjacent cells:
  // equal distance parities mean an odd segment, so both cells become
  // generals; otherwise only the marker's cell does. A one-cell gap that
  // both close in the same step puts a single general in the gap.
  const auto west_parity = [](const LineCell& c) -> std::uint8_t { return c.ml ? c.pml : 0; };
  const auto east_parity = [](const LineCell& c) -> std::uint8_t { return c.mr ? c.pmr : 0; };

  if (S.fr && R && R->west_marker()) {  // fast here, marker east of me
    if (S.pfr == west_parity(*R)) return born(true, false);
    n.ml = 0, n.pml = 0;
  }
  if (S.fl && L && L->east_marker()) {  // mirror
    if (S.pfl == east_parity(*L)) return born(false, true);
    n.mr = 0, n.pmr = 0;
  }
  if (L && L->fr && S.ml) return L->pfr == S.pml ? born(false, true) : born(true, true);
  if (R && R->fl && S.mr) return R->pfl == S.pmr ? born(true, false) : born(true, true);
  if (L && L->fr && R && R->west_marker() && S.tl) return born(true, true);
  if (R && R->fl && L && L->east_marker() && S.tr) return born(true, true);

  if (n.fr && !R) return born(true, false);  // reflection at the east wall
  if (n.fl && !L) return born(false, true);
  return n;
}

struct LineRun {
  std::optional<int> fire_time;  // common firing time, if the line synchronised
  bool simultaneous = false;
  bool quiescence_ok = true;
  int steps = 0;
};

// Run the line of n cells with the general at the west end. Checks the
// quiescence rule on every step.
inline LineRun run_line_fssp_detail(int n, int horizon = -1) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (horizon < 0) horizon = 4 * n + 8;
  std::vector<LineCell> cur(n), nxt(n);
  cur[0] = make_general(false, n > 1);
  LineRun run;
  auto all_fired = [&] {
    for (const auto& c : cur)
      if (!c.fired) return false;
    return true;
  };
  auto any_fired = [&] {
    for (const auto& c : cur)
      if (c.fired) return true;
    return false;
  };
  for (int t = 0; t <= horizon; ++t) {
    if (any_fired()) {
      run.fire_time = t;
      run.simultaneous = all_fired();
      run.steps = t;
      return run;
    }
    for (int i = 0; i < n; ++i) {
      const LineCell* L = i > 0 ? &cur[i - 1] : nullptr;
      const LineCell* R = i + 1 < n ? &cur[i + 1] : nullptr;
      nxt[i] = line_step(L, cur[i], R);
      const bool calm = cur[i].quiescent() && (!L || L->quiescent()) && (!R || R->quiescent());
      if (calm && !nxt[i].quiescent()) run.quiescence_ok = false;
    }
    std::swap(cur, nxt);
  }
  run.steps = horizon;
  return run;
}

// Firing time of an n-cell line: 2n - 2 when the construction is correct.
inline int run_line_fssp(int n) {
  auto r = run_line_fssp_detail(n);
  if (!r.fire_time || !r.simultaneous || !r.quiescence_ok) return -1;
  return *r.fire_time;
}

}  // namespace fssp
