"""Stochastic counterexample search over edge colorings (simulated annealing).

Objective = (summed per-vertex color-degree deficit below the bound)
          + penalty * (count of forbidden-property violations),
with the penalty chosen so one violation outweighs any achievable deficit.
Moves recolor a single edge within a bounded palette; in general scope a move
may also toggle an edge.  A returned graph is always re-verified by the exact
routines before being handed back.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional

from .graph import ColoredGraph, DegreeProfile, GraphError, validate
from .packing import max_disjoint_packing, two_disjoint_rainbow
from .triangles import exists_rainbow_triangle

FORBID_RAINBOW = "rainbow-triangle"
FORBID_TWO_DISJOINT = "two-disjoint-rainbow"


@dataclass
class SearchConfig:
    n: int
    scope: str = "complete"                 # "complete" | "general"
    min_color_degree: int = 1
    forbid: str = FORBID_TWO_DISJOINT
    move_budget: int = 100_000_000          # total moves across all restarts
    restarts: int = 32
    seed: int = 0
    max_palette: Optional[int] = None       # defaults to n(n-1)/2

    def validate(self) -> None:
        if self.n < 3:
            raise GraphError(f"search needs n >= 3, got {self.n}")
        if self.scope not in ("complete", "general"):
            raise GraphError(f"unknown scope {self.scope!r}")
        if self.forbid not in (FORBID_RAINBOW, FORBID_TWO_DISJOINT):
            raise GraphError(f"unknown forbidden property {self.forbid!r}")
        if self.move_budget < 1:
            raise GraphError("move budget must be at least 1")
        if self.restarts < 1:
            raise GraphError("need at least one restart")
        if not 1 <= self.min_color_degree <= self.n - 1:
            raise GraphError(
                f"color-degree bound must lie in 1..{self.n - 1}, got {self.min_color_degree}")


@dataclass
class SearchLog:
    restarts_run: int = 0
    moves_used: int = 0
    best_objective: int = -1
    found_restart: Optional[int] = None
    found_move: Optional[int] = None


class _AnnealState:
    """Incrementally maintained coloring with deficit and violation counts."""

    def __init__(self, cfg: SearchConfig, rng: random.Random):
        n = cfg.n
        self.n = n
        self.cfg = cfg
        self.palette = cfg.max_palette or n * (n - 1) // 2
        self.palette = min(self.palette, n * (n - 1) // 2)
        self.pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.eidx = {}
        for i, (u, v) in enumerate(self.pairs):
            self.eidx[(u, v)] = i
        # triangles and their edge indices
        self.tris = []
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    self.tris.append((self.eidx[(a, b)], self.eidx[(a, c)],
                                      self.eidx[(b, c)], (a, b, c)))
        self.edge_tris = [[] for _ in self.pairs]
        for t, (e1, e2, e3, _verts) in enumerate(self.tris):
            self.edge_tris[e1].append(t)
            self.edge_tris[e2].append(t)
            self.edge_tris[e3].append(t)
        self.tri_disj = []
        for t, (_a, _b, _c, verts) in enumerate(self.tris):
            vs = set(verts)
            self.tri_disj.append([s for s, (_x, _y, _z, ws) in enumerate(self.tris)
                                  if not vs & set(ws)])
        # initial coloring: random colors over a bound-sized sub-palette,
        # all edges present
        init_colors = max(2, min(self.palette, cfg.min_color_degree + 2))
        self.color = [rng.randrange(init_colors) for _ in self.pairs]
        self.present = [True] * len(self.pairs)
        self.cnt = [[0] * self.palette for _ in range(n)]
        self.dc = [0] * n
        for i, (u, v) in enumerate(self.pairs):
            c = self.color[i]
            for w in (u, v):
                if self.cnt[w][c] == 0:
                    self.dc[w] += 1
                self.cnt[w][c] += 1
        self.deficit = sum(max(0, cfg.min_color_degree - d) for d in self.dc)
        self.rainbow = [False] * len(self.tris)
        self.violations = 0  # rainbow count or disjoint-pair count
        for t in range(len(self.tris)):
            if self._tri_rainbow(t):
                self._flip(t)

    # -- primitive updates ------------------------------------------------

    def _tri_rainbow(self, t: int) -> bool:
        e1, e2, e3, _verts = self.tris[t]
        if not (self.present[e1] and self.present[e2] and self.present[e3]):
            return False
        c1, c2, c3 = self.color[e1], self.color[e2], self.color[e3]
        return c1 != c2 and c1 != c3 and c2 != c3

    def _flip(self, t: int) -> None:
        # toggle the rainbow flag of t and maintain the violation count
        if self.cfg.forbid == FORBID_RAINBOW:
            delta = 1
        else:
            delta = 0
            for s in self.tri_disj[t]:
                if self.rainbow[s]:
                    delta += 1
        if self.rainbow[t]:
            self.violations -= delta
            self.rainbow[t] = False
        else:
            self.violations += delta
            self.rainbow[t] = True

    def _cnt_add(self, w: int, c: int) -> None:
        bound = self.cfg.min_color_degree
        if self.cnt[w][c] == 0:
            if self.dc[w] < bound:
                self.deficit -= 1
            self.dc[w] += 1
        self.cnt[w][c] += 1

    def _cnt_remove(self, w: int, c: int) -> None:
        bound = self.cfg.min_color_degree
        self.cnt[w][c] -= 1
        if self.cnt[w][c] == 0:
            self.dc[w] -= 1
            if self.dc[w] < bound:
                self.deficit += 1

    def _refresh_edge_triangles(self, e: int) -> None:
        for t in self.edge_tris[e]:
            if self._tri_rainbow(t) != self.rainbow[t]:
                self._flip(t)

    # -- moves (each returns an undo closure argument) ---------------------

    def recolor(self, e: int, c_new: int) -> int:
        u, v = self.pairs[e]
        c_old = self.color[e]
        self.color[e] = c_new
        self._cnt_remove(u, c_old)
        self._cnt_remove(v, c_old)
        self._cnt_add(u, c_new)
        self._cnt_add(v, c_new)
        self._refresh_edge_triangles(e)
        return c_old

    def toggle(self, e: int, c_new: int) -> tuple[bool, int]:
        u, v = self.pairs[e]
        was_present = self.present[e]
        c_old = self.color[e]
        if was_present:
            self.present[e] = False
            self._cnt_remove(u, c_old)
            self._cnt_remove(v, c_old)
        else:
            self.present[e] = True
            self.color[e] = c_new
            self._cnt_add(u, c_new)
            self._cnt_add(v, c_new)
        self._refresh_edge_triangles(e)
        return was_present, c_old

    def objective(self) -> int:
        penalty = self.n * self.cfg.min_color_degree + 1
        return self.deficit + penalty * self.violations

    # -- guided proposals: pieces of state the move policy peeks at ---------

    def deficient_vertices(self) -> list[int]:
        bound = self.cfg.min_color_degree
        return [v for v in range(self.n) if self.dc[v] < bound]

    def violating_triangles(self) -> list[int]:
        if self.cfg.forbid == FORBID_RAINBOW:
            return [t for t, r in enumerate(self.rainbow) if r]
        out = []
        for t, r in enumerate(self.rainbow):
            if r and any(self.rainbow[s] for s in self.tri_disj[t]):
                out.append(t)
        return out

    def to_graph(self) -> ColoredGraph:
        edges = [(u, v, self.color[i])
                 for i, (u, v) in enumerate(self.pairs) if self.present[i]]
        return validate(edges, self.n)


def _violates_forbidden(g: ColoredGraph, forbid: str) -> bool:
    """Exact independent check of the forbidden property (not the annealer's view)."""
    if forbid == FORBID_RAINBOW:
        return exists_rainbow_triangle(g) is not None
    if two_disjoint_rainbow(g) is not None:
        return True
    # belt and braces: the exact packing routine must agree
    return max_disjoint_packing(g, mode="exact").size >= 2


def _verify_candidate(g: ColoredGraph, cfg: SearchConfig) -> bool:
    profile = DegreeProfile.from_graph(g)
    if profile.min_color_degree < cfg.min_color_degree:
        return False
    if cfg.scope == "complete" and not g.is_complete:
        return False
    return not _violates_forbidden(g, cfg.forbid)


def search_counterexample(cfg: SearchConfig) -> tuple[Optional[ColoredGraph], SearchLog]:
    """Anneal toward a coloring meeting the bound with zero forbidden violations.

    Deterministic per (seed, restart index).  Returns the first fully
    re-verified hit, or None with the best objective reached.
    """
    cfg.validate()
    log = SearchLog()
    per_restart = max(1, cfg.move_budget // cfg.restarts)
    t_start, t_end = 4.0, 0.05
    cycle = max(2_000, min(per_restart, 60_000))  # sawtooth reheat period
    for restart in range(cfg.restarts):
        if log.moves_used >= cfg.move_budget:
            break
        budget = min(per_restart, cfg.move_budget - log.moves_used)
        rng = random.Random(f"search:{cfg.seed}:{restart}")
        state = _AnnealState(cfg, rng)
        cool = (t_end / t_start) ** (1.0 / cycle)
        temp = t_start
        obj = state.objective()
        best = obj
        plateau = 0
        plateau_window = max(50_000, budget // 4)
        m = len(state.pairs)
        general = cfg.scope == "general"
        if obj == 0:
            candidate = state.to_graph()
            if _verify_candidate(candidate, cfg):
                log.restarts_run = restart + 1
                log.best_objective = 0
                log.found_restart = restart
                log.found_move = 0
                return candidate, log
        for move in range(budget):
            log.moves_used += 1
            temp *= cool
            if temp < t_end:
                temp = t_start  # reheat: next sawtooth cycle from current state
            # move proposal: mostly guided repairs, sometimes a uniform kick
            kind = rng.random()
            e = -1
            c_new = -1
            if kind < 0.45 and state.violations:
                viol = state.violating_triangles()
                if viol:
                    t = viol[rng.randrange(len(viol))]
                    e1, e2, e3, _verts = state.tris[t]
                    pick = rng.randrange(3)
                    e = (e1, e2, e3)[pick]
                    if general and not all(state.present[x] for x in (e1, e2, e3)):
                        e = -1
                    else:
                        others = [x for x in (e1, e2, e3) if x != e]
                        # monochromatize the triangle to kill its rainbowness
                        c_new = state.color[others[rng.randrange(2)]]
            elif kind < 0.9 and state.deficit:
                deficient = state.deficient_vertices()
                if deficient:
                    v = deficient[rng.randrange(len(deficient))]
                    incident = [i for i, (a, b) in enumerate(state.pairs)
                                if (a == v or b == v) and state.present[i]]
                    if incident:
                        e = incident[rng.randrange(len(incident))]
                        absent = [c for c in range(state.palette)
                                  if state.cnt[v][c] == 0]
                        if absent:
                            c_new = absent[rng.randrange(len(absent))]
            if e < 0:
                e = rng.randrange(m)
                c_new = rng.randrange(state.palette)
            toggled = False
            if general and (not state.present[e] or rng.random() < 0.15):
                undo = state.toggle(e, c_new if c_new >= 0 else rng.randrange(state.palette))
                toggled = True
            else:
                if not state.present[e]:
                    continue
                if c_new < 0 or c_new == state.color[e]:
                    continue
                undo = state.recolor(e, c_new)
            new_obj = state.objective()
            delta = new_obj - obj
            if delta <= 0 or rng.random() < math.exp(-delta / temp):
                obj = new_obj
            else:
                if toggled:
                    was_present, c_old = undo
                    # re-toggling restores presence; c_old recolors a re-add
                    state.toggle(e, c_old if was_present else 0)
                else:
                    state.recolor(e, undo)
                continue
            if obj < best:
                best = obj
                plateau = 0
            else:
                plateau += 1
                if plateau > plateau_window:
                    break
            if obj == 0:
                candidate = state.to_graph()
                if _verify_candidate(candidate, cfg):
                    log.restarts_run = restart + 1
                    log.best_objective = 0
                    log.found_restart = restart
                    log.found_move = move
                    return candidate, log
        log.restarts_run = restart + 1
        if log.best_objective < 0 or best < log.best_objective:
            log.best_objective = best
    return None, log
