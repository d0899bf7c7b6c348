#pragma once

#include <functional>
#include <string>

#include "line_fssp.hpp"
#include "transcript.hpp"

namespace fssp {

// Cell of the one-hole square automaton. Four layers share the cell:
//  - diagonal: A marks (i,i) at time 2i. A sends a step east and a step
//    north; a step turns towards the diagonal on the next move. A step whose
//    turn is blocked by a hole detours one cell further and then turns twice.
//  - line: every A starts a line firing squad along its row (east) and its
//    column (north), one cell off the diagonal.
//  - sweep: J runs east on the bottom row, turns into K on the east side and
//    drops L westwards in every row below the top one. M, N, O mirror this.
//  - firing: a line cell commits (a1) when its line fires and it has seen L
//    or O; a node fires one step after itself or a neighbour committed. The
//    north-east corner fires as soon as A reaches it.
struct Sh1Cell {
  std::uint8_t a = 0, diag = 0;
  std::uint8_t estep = 0, estep_blocked = 0, nstep = 0, nstep_blocked = 0;
  std::uint8_t de0 = 0, de1 = 0, dn0 = 0, dn1 = 0;
  std::uint8_t j = 0, k = 0, l = 0, m = 0, n = 0, o = 0, swept = 0;
  LineCell h, v;
  std::uint8_t a1 = 0, fired = 0;

  bool quiescent() const noexcept {
    return !(a | diag | estep | nstep | de0 | de1 | dn0 | dn1 | j | k | l | m | n | o | swept | a1 | fired) &&
           h.quiescent() && v.quiescent();
  }
};

struct Sh1Diagnostics {
  std::map<Position, std::vector<int>> a_times;  // every step at which A sat on the node
  std::map<Position, int> line_fire;             // line layer firing
  std::map<Position, int> sweep_arrival;         // first L or O
  std::map<Position, int> a1_commit;
  std::optional<Position> corner_patch;  // node fired only by the corner rule
  bool quiescence_ok = true;
};

struct Sh1Run {
  FiringTranscript transcript;
  Sh1Diagnostics diag;
};

namespace detail {

struct Sh1Nbrs {
  const Sh1Cell* e = nullptr;
  const Sh1Cell* n = nullptr;
  const Sh1Cell* w = nullptr;
  const Sh1Cell* s = nullptr;
};

inline Sh1Cell sh1_step(const Sh1Cell& S, const Sh1Nbrs& nb) {
  if (S.fired) {  // firing is final and drops every signal
    Sh1Cell f;
    f.fired = 1;
    f.diag = S.diag;
    return f;
  }
  Sh1Cell x;
  const auto* E = nb.e;
  const auto* N = nb.n;
  const auto* W = nb.w;
  const auto* Sd = nb.s;

  // diagonal layer
  x.a = (Sd && Sd->estep) || (W && W->nstep) || (Sd && Sd->de1) || (W && W->dn1);
  x.diag = S.diag || x.a;
  x.estep = W && W->a;
  x.estep_blocked = x.estep && !N;
  x.nstep = Sd && Sd->a;
  x.nstep_blocked = x.nstep && !E;
  x.de0 = W && W->estep && W->estep_blocked;
  x.de1 = Sd && Sd->de0;
  x.dn0 = Sd && Sd->nstep && Sd->nstep_blocked;
  x.dn1 = W && W->dn0;

  // sweeps
  x.j = W && W->j && E;
  x.k = (W && W->j && !E) || (Sd && Sd->k && N);
  x.l = (x.k && N) || (E && E->l && !S.diag && !x.a);
  x.m = Sd && Sd->m && N;
  x.n = (Sd && Sd->m && !N) || (W && W->n && E);
  x.o = (x.n && E) || (N && N->o && !S.diag && !x.a);
  x.swept = S.swept || x.l || x.o;

  // line layers; the diagonal is a wall for both
  if (!x.diag) {
    if (x.estep) {
      x.h = make_general(false, E != nullptr);
    } else {
      const LineCell* lw = (W && !W->diag) ? &W->h : nullptr;
      const LineCell* le = E ? &E->h : nullptr;
      x.h = line_step(lw, S.h, le);
    }
    if (x.nstep) {
      x.v = make_general(false, N != nullptr);
    } else {
      const LineCell* ls = (Sd && !Sd->diag) ? &Sd->v : nullptr;
      const LineCell* ln = N ? &N->v : nullptr;
      x.v = line_step(ls, S.v, ln);
    }
  }
  const bool line_fires = (x.h.fired && !S.h.fired) || (x.v.fired && !S.v.fired);
  x.a1 = line_fires && x.swept;

  const bool closure = S.a1 || (E && E->a1) || (N && N->a1) || (W && W->a1) || (Sd && Sd->a1);
  const bool corner = x.a && !E && !N && W && Sd;
  x.fired = closure || corner;
  return x;
}

}  // namespace detail

using Sh1Observer = std::function<void(int t, const Configuration&, const std::vector<Sh1Cell>&)>;

inline Sh1Run run_sh1(const Configuration& c, const Sh1Observer& observe = {}) {
  if (c.k() > 1) throw Error(ErrorCode::WrongHoleCount, "one-hole automaton got k=" + std::to_string(c.k()));
  const int w = c.size();
  if (w < 1) throw Error(ErrorCode::SizeTooSmall, "w must be >= 1");
  std::vector<Sh1Cell> cur(c.cells()), nxt(c.cells());
  cur[c.index(kGeneral)].a = cur[c.index(kGeneral)].diag = 1;
  cur[c.index(kGeneral)].j = cur[c.index(kGeneral)].m = 1;

  Sh1Run run;
  const int horizon = 2 * w + 4;
  run.transcript.horizon = horizon;
  for (auto p : c.nodes()) run.transcript.fire_time[p] = std::nullopt;

  auto nbr = [&](const std::vector<Sh1Cell>& g, Position p, int d) -> const Sh1Cell* {
    const Position q = p + kDirs[d];
    return c.is_node(q) ? &g[c.index(q)] : nullptr;
  };
  auto record = [&](int t) {
    for (auto p : c.nodes()) {
      const auto& s = cur[c.index(p)];
      if (s.a) run.diag.a_times[p].push_back(t);
      if ((s.h.fired || s.v.fired) && !run.diag.line_fire.count(p)) run.diag.line_fire[p] = t;
      if (s.swept && !run.diag.sweep_arrival.count(p)) run.diag.sweep_arrival[p] = t;
      if (s.a1) run.diag.a1_commit[p] = t;
      auto& ft = run.transcript.fire_time[p];
      if (s.fired && !ft) ft = t;
    }
    if (observe) observe(t, c, cur);
  };

  record(0);
  for (int t = 0; t < horizon; ++t) {
    for (auto p : c.nodes()) {
      const int i = c.index(p);
      detail::Sh1Nbrs nb{nbr(cur, p, 0), nbr(cur, p, 1), nbr(cur, p, 2), nbr(cur, p, 3)};
      nxt[i] = detail::sh1_step(cur[i], nb);
      bool calm = cur[i].quiescent();
      for (const auto* q : {nb.e, nb.n, nb.w, nb.s})
        if (q && !q->quiescent()) calm = false;
      if (calm && !nxt[i].quiescent()) run.diag.quiescence_ok = false;
      // the corner rule is the only reason this node fires
      const bool closure = cur[i].a1 || (nb.e && nb.e->a1) || (nb.n && nb.n->a1) || (nb.w && nb.w->a1) ||
                           (nb.s && nb.s->a1);
      if (nxt[i].fired && !cur[i].fired && !closure) run.diag.corner_patch = p;
    }
    std::swap(cur, nxt);
    record(t + 1);
  }
  return run;
}

// One character per position, north row first.
inline std::string render_sh1(const Configuration& c, const std::vector<Sh1Cell>& g) {
  std::string out;
  for (int y = c.size(); y >= 0; --y) {
    for (int x = 0; x <= c.size(); ++x) {
      const Position p{x, y};
      if (!c.is_node(p)) {
        out += '#';
        continue;
      }
      const auto& s = g[c.index(p)];
      char ch = '.';
      if (s.fired) ch = 'F';
      else if (s.a1) ch = '!';
      else if (s.a) ch = 'A';
      else if (s.h.gen || s.v.gen) ch = 'G';
      else if (s.l || s.o) ch = 'L';
      else if (s.j || s.k || s.m || s.n) ch = 'J';
      else if (!s.h.quiescent() || !s.v.quiescent()) ch = '-';
      else if (s.diag) ch = '\\';
      out += ch;
    }
    out += '\n';
  }
  return out;
}

}  // namespace fssp
