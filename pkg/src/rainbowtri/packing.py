"""Vertex-disjoint rainbow triangle packing and edge-disjoint packings at a vertex."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import ColoredGraph, GraphError
from .matching import maximum_matching
from .triangles import Triangle, enumerate_triangles, _make_triangle

EXACT_MODE_MAX_N = 30


@dataclass(frozen=True)
class Packing:
    """A set of rainbow triangles, vertex-disjoint or edge-disjoint at an anchor."""

    triangles: tuple[Triangle, ...]
    kind: str  # "vertex-disjoint" | "edge-disjoint-at-vertex"
    anchor: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.triangles)


def _triangle_masks(triangles: list[Triangle]) -> list[int]:
    return [1 << t.vertices[0] | 1 << t.vertices[1] | 1 << t.vertices[2]
            for t in triangles]


def _greedy_packing(masks: list[int]) -> list[int]:
    chosen: list[int] = []
    used = 0
    for i, mask in enumerate(masks):
        if not used & mask:
            chosen.append(i)
            used |= mask
    return chosen


def _improve_by_single_swap(masks: list[int], chosen: list[int]) -> list[int]:
    # replace one chosen triangle with two others whenever that gains a slot
    improved = True
    while improved:
        improved = False
        used = 0
        for i in chosen:
            used |= masks[i]
        for pos, i in enumerate(chosen):
            free = used & ~masks[i]
            candidates = [j for j, m in enumerate(masks)
                          if j not in chosen and not m & free]
            for a_idx, a in enumerate(candidates):
                for b in candidates[a_idx + 1:]:
                    if not masks[a] & masks[b]:
                        chosen = chosen[:pos] + chosen[pos + 1:] + [a, b]
                        chosen.sort()
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
    return chosen


def _exact_packing(masks: list[int]) -> list[int]:
    """Maximum disjoint family by branch and bound over the triangle list."""
    t = len(masks)
    best = _greedy_packing(masks)  # greedy lower bound to start

    def free_bound(used: int, start: int) -> int:
        # each further triangle needs 3 unused vertices
        remaining = 0
        seen = 0
        for j in range(start, t):
            if not masks[j] & used:
                remaining += 1
                seen |= masks[j]
        free_vertices = bin(seen).count("1")
        return min(remaining, free_vertices // 3)

    def dfs(start: int, used: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if start >= t:
            return
        if len(chosen) + free_bound(used, start) <= len(best):
            return
        for j in range(start, t):
            if masks[j] & used:
                continue
            if len(chosen) + 1 + free_bound(used | masks[j], j + 1) <= len(best):
                continue
            chosen.append(j)
            dfs(j + 1, used | masks[j], chosen)
            chosen.pop()
        return

    dfs(0, 0, [])
    return sorted(best)


def max_disjoint_packing(g: ColoredGraph, mode: str = "exact") -> Packing:
    """A vertex-disjoint rainbow-triangle packing.

    ``exact`` returns a maximum-cardinality packing (branch and bound,
    n <= 30); ``greedy`` returns a maximal one found by lexicographic greedy
    plus single-swap improvement.
    """
    if mode not in ("exact", "greedy"):
        raise GraphError(f"unknown packing mode {mode!r}")
    if mode == "exact" and g.n > EXACT_MODE_MAX_N:
        raise GraphError(
            f"exact packing supports n <= {EXACT_MODE_MAX_N} (got n={g.n}); use greedy mode")
    triangles = enumerate_triangles(g, rainbow_only=True)
    masks = _triangle_masks(triangles)
    if mode == "greedy":
        chosen = _greedy_packing(masks)
        chosen = _improve_by_single_swap(masks, chosen)
    else:
        chosen = _exact_packing(masks)
    return Packing(tuple(triangles[i] for i in sorted(chosen)), "vertex-disjoint")


def two_disjoint_rainbow(g: ColoredGraph) -> Optional[tuple[Triangle, Triangle]]:
    """A pair of vertex-disjoint rainbow triangles if one exists (early exit)."""
    triangles = enumerate_triangles(g, rainbow_only=True)
    masks = _triangle_masks(triangles)
    for i in range(len(triangles)):
        for j in range(i + 1, len(triangles)):
            if not masks[i] & masks[j]:
                return triangles[i], triangles[j]
    return None


def edge_disjoint_at_vertex(g: ColoredGraph, v: int) -> Packing:
    """Maximum set of rainbow triangles through v sharing only the vertex v.

    Triangles through v that pairwise share no edge correspond to a matching
    in the link graph L(v) = {xy : triangle vxy is rainbow}; that matching is
    solved exactly (L(v) is a general graph, so blossoms are handled).
    """
    g._check_vertex(v)
    n = g.n
    cm = g._cmat
    nbrs = [u for u in range(n) if g._adj[v] >> u & 1]
    index = {u: i for i, u in enumerate(nbrs)}
    link_adj: list[list[int]] = [[] for _ in nbrs]
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g._adj[x] >> y & 1:
                continue
            a, b, c = cm[v * n + x], cm[v * n + y], cm[x * n + y]
            if a != b and a != c and b != c:
                link_adj[index[x]].append(index[y])
                link_adj[index[y]].append(index[x])
    match = maximum_matching(len(nbrs), link_adj)
    triangles = []
    for i, j in enumerate(match):
        if j > i:
            tri = tuple(sorted((v, nbrs[i], nbrs[j])))
            triangles.append(_make_triangle(g, *tri))
    triangles.sort(key=lambda t: t.vertices)
    return Packing(tuple(triangles), "edge-disjoint-at-vertex", anchor=v)
