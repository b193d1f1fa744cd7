"""Exhaustive canonical enumeration of edge-colorings of K_n.

Colorings are enumerated as restricted growth strings over the lexicographic
edge order, which visits every coloring exactly once up to color renaming.
"""

from __future__ import annotations

from typing import Callable, Optional

from .bell import bell_number
from .graph import ColoredGraph, DegreeProfile, GraphError, from_canonical_coloring
from ._kernel.pure import edge_order

ENUM_MAX_N = 7


class EnumState:
    """Live view of the coloring being visited.

    Valid only for the duration of one visitor call; copy what you keep.
    """

    __slots__ = ("n", "m", "colors", "_cnt", "_dc")

    def __init__(self, n: int, m: int, colors: list[int],
                 cnt: list[list[int]], dc: list[int]):
        self.n = n
        self.m = m
        self.colors = colors
        self._cnt = cnt
        self._dc = dc

    @property
    def color_degree(self) -> list[int]:
        return list(self._dc)

    @property
    def min_color_degree(self) -> int:
        return min(self._dc)

    @property
    def mono_degree(self) -> list[int]:
        return [max(row) if any(row) else 0 for row in self._cnt]

    @property
    def max_mono_degree(self) -> int:
        return max(self.mono_degree)

    def profile(self) -> DegreeProfile:
        mono = self.mono_degree
        deg = [sum(row) for row in self._cnt]
        return DegreeProfile(tuple(deg), tuple(self._dc), tuple(mono),
                             min(self._dc), max(mono))

    def as_graph(self) -> ColoredGraph:
        return from_canonical_coloring(self.n, tuple(self.colors))


def enumerate_canonical_colorings(n: int, scope: str = "complete",
                                  visitor: Optional[Callable[[EnumState], None]] = None
                                  ) -> int:
    """Visit every edge-coloring of K_n exactly once up to color renaming.

    The visitor receives an :class:`EnumState` with per-vertex color counts
    maintained incrementally.  Returns the number of colorings visited, which
    equals Bell(n(n-1)/2).
    """
    if scope != "complete":
        raise GraphError(f"enumeration supports complete scope only, got {scope!r}")
    if not 1 <= n <= ENUM_MAX_N:
        m = n * (n - 1) // 2 if n >= 1 else 0
        raise GraphError(
            f"enumeration requires 1 <= n <= {ENUM_MAX_N}; "
            f"n={n} would visit Bell({m}) = {bell_number(m) if n >= 1 else 0} colorings")
    pairs = edge_order(n)
    m = len(pairs)
    colors = [0] * m
    cnt = [[0] * (m + 1) for _ in range(n)]
    dc = [0] * n
    state = EnumState(n, m, colors, cnt, dc)
    visited = 0

    def descend(depth: int, blocks: int) -> None:
        nonlocal visited
        if depth == m:
            visited += 1
            if visitor is not None:
                visitor(state)
            return
        u, v = pairs[depth]
        cnt_u = cnt[u]
        cnt_v = cnt[v]
        for c in range(blocks + 1):
            new_u = cnt_u[c] == 0
            new_v = cnt_v[c] == 0
            colors[depth] = c
            cnt_u[c] += 1
            cnt_v[c] += 1
            dc[u] += new_u
            dc[v] += new_v
            descend(depth + 1, blocks + 1 if c == blocks else blocks)
            cnt_u[c] -= 1
            cnt_v[c] -= 1
            dc[u] -= new_u
            dc[v] -= new_v
        return

    descend(0, 0)
    return visited


def exhaustive_structure_search(n: int, min_color_degree: int, forbid: str,
                                cap: int = 3,
                                edges: Optional[list[tuple[int, int]]] = None
                                ) -> tuple[int, list[ColoredGraph], bool]:
    """Complete search for colorings meeting a color-degree bound while
    avoiding a forbidden structure.

    ``forbid`` is "rainbow-triangle" or "two-disjoint-rainbow".  ``edges``
    restricts the colorable edge set (default: all of K_n); the edge list is
    reordered so that vertex-disjoint triangles complete early, which lets the
    forbidden-structure prune cut deep.  Returns (nodes, graphs, exhausted):
    up to ``cap`` witnesses, and whether the whole space was swept.
    """
    from . import _kernel
    if forbid not in ("rainbow-triangle", "two-disjoint-rainbow"):
        raise GraphError(f"unknown forbidden structure {forbid!r}")
    pairs = edges if edges is not None else edge_order(n)
    pairs = [(min(u, v), max(u, v)) for u, v in pairs]
    order = _disjoint_first_order(n, pairs)
    nodes, found, exhausted = _kernel.structure_search(
        n, 2 * min_color_degree, forbid == "two-disjoint-rainbow", cap, order)
    graphs = []
    for colors in found:
        from .graph import validate
        graphs.append(validate([(u, v, c) for (u, v), c in zip(order, colors)], n))
    return nodes, graphs, exhausted


def _disjoint_first_order(n: int, pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Order edges so two vertex-disjoint triangles (if present) come first,
    then greedily maximize completed triangles per step."""
    pair_set = set(pairs)
    order: list[tuple[int, int]] = []
    if n >= 6:
        for tri in ((0, 1, 2), (3, 4, 5)):
            a, b, c = tri
            block = [(a, b), (a, c), (b, c)]
            if all(p in pair_set for p in block):
                order.extend(block)
    present = set(order)
    while len(order) < len(pairs):
        best = None
        best_score = -1
        for p in pairs:
            if p in present:
                continue
            u, v = p
            score = sum(1 for w in range(n) if w != u and w != v
                        and (min(w, u), max(w, u)) in present
                        and (min(w, v), max(w, v)) in present)
            if score > best_score:
                best, best_score = p, score
        order.append(best)
        present.add(best)
    return order


def shard_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """All RGS prefixes of the given depth, lexicographically ordered."""
    m = n * (n - 1) // 2
    depth = min(depth, m)
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int], blocks: int) -> None:
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        for c in range(blocks + 1):
            prefix.append(c)
            grow(prefix, blocks + 1 if c == blocks else blocks)
            prefix.pop()

    grow([], 0)
    return out


def shard_depth_for(n: int) -> int:
    """Shard granularity: enough prefixes to balance a small worker pool."""
    m = n * (n - 1) // 2
    if m >= 12:
        return 6
    if m >= 8:
        return 4
    if m >= 4:
        return 2
    return 0
