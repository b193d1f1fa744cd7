"""Triangle and short-cycle queries on edge-colored graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import ColoredGraph


@dataclass(frozen=True)
class Triangle:
    """A triangle u < v < w with its edge colors (uv, uw, vw)."""

    vertices: tuple[int, int, int]
    colors: tuple[int, int, int]
    rainbow: bool

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class ProperCycle:
    """A cycle (length 3 or 4) whose consecutive edges have distinct colors.

    ``vertices`` lists the cycle order; ``colors[i]`` is the color of the edge
    from vertices[i] to vertices[(i+1) % len].
    """

    vertices: tuple[int, ...]
    colors: tuple[int, ...]


def _make_triangle(g: ColoredGraph, u: int, v: int, w: int) -> Triangle:
    n = g.n
    cm = g._cmat
    a, b, c = cm[u * n + v], cm[u * n + w], cm[v * n + w]
    return Triangle((u, v, w), (a, b, c), a != b and a != c and b != c)


def iter_triangles(g: ColoredGraph) -> Iterator[Triangle]:
    """All triangles of g, vertices ascending, in lexicographic order."""
    n = g.n
    adj = g._adj
    for u in range(n):
        for v in range(u + 1, n):
            if not adj[u] >> v & 1:
                continue
            common = adj[u] & adj[v]
            for w in range(v + 1, n):
                if common >> w & 1:
                    yield _make_triangle(g, u, v, w)


def enumerate_triangles(g: ColoredGraph, rainbow_only: bool = False) -> list[Triangle]:
    """List all triangles (or only the rainbow ones) in deterministic order."""
    if rainbow_only:
        return [t for t in iter_triangles(g) if t.rainbow]
    return list(iter_triangles(g))


def rainbow_triangles_at(g: ColoredGraph, v: int) -> list[Triangle]:
    """Exactly the rainbow triangles through v, in lexicographic order."""
    g._check_vertex(v)
    n = g.n
    cm = g._cmat
    adj = g._adj
    out = []
    nbrs = [u for u in range(n) if adj[v] >> u & 1]
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not adj[x] >> y & 1:
                continue
            a, b, c = cm[v * n + x], cm[v * n + y], cm[x * n + y]
            if a != b and a != c and b != c:
                u1, u2, u3 = sorted((v, x, y))
                out.append(_make_triangle(g, u1, u2, u3))
    out.sort(key=lambda t: t.vertices)
    return out


def exists_rainbow_triangle(g: ColoredGraph) -> Optional[Triangle]:
    """First rainbow triangle in lexicographic order, or None."""
    for t in iter_triangles(g):
        if t.rainbow:
            return t
    return None


def count_rainbow_per_vertex(g: ColoredGraph) -> list[int]:
    """Number of rainbow triangles through each vertex."""
    counts = [0] * g.n
    for t in iter_triangles(g):
        if t.rainbow:
            for v in t.vertices:
                counts[v] += 1
    return counts


def find_pc_cycle_le4(g: ColoredGraph) -> Optional[ProperCycle]:
    """A properly colored cycle of length 3 or 4, if one exists.

    Shorter cycles are preferred; among cycles of equal length the
    lexicographically first vertex tuple wins.  For a triangle "properly
    colored" coincides with "rainbow".
    """
    t = exists_rainbow_triangle(g)
    if t is not None:
        return ProperCycle(t.vertices, t.colors)
    n = g.n
    cm = g._cmat
    adj = g._adj
    # canonical 4-cycle a-b-c-d-a: a is the minimum, b < d
    for a in range(n):
        for b in range(a + 1, n):
            if not adj[a] >> b & 1:
                continue
            for c in range(a + 1, n):
                if c == b or not adj[b] >> c & 1:
                    continue
                for d in range(b + 1, n):
                    if d == c or not adj[c] >> d & 1 or not adj[d] >> a & 1:
                        continue
                    ab, bc = cm[a * n + b], cm[b * n + c]
                    cd, da = cm[c * n + d], cm[d * n + a]
                    if ab != bc and bc != cd and cd != da and da != ab:
                        return ProperCycle((a, b, c, d), (ab, bc, cd, da))
    return None


def all_pc_cycles_le4(g: ColoredGraph) -> list[ProperCycle]:
    """Every properly colored cycle of length 3 or 4 (canonical orientations)."""
    out = [ProperCycle(t.vertices, t.colors)
           for t in iter_triangles(g) if t.rainbow]
    n = g.n
    cm = g._cmat
    adj = g._adj
    for a in range(n):
        for b in range(a + 1, n):
            if not adj[a] >> b & 1:
                continue
            for c in range(a + 1, n):
                if c == b or not adj[b] >> c & 1:
                    continue
                for d in range(b + 1, n):
                    if d == c or not adj[c] >> d & 1 or not adj[d] >> a & 1:
                        continue
                    ab, bc = cm[a * n + b], cm[b * n + c]
                    cd, da = cm[c * n + d], cm[d * n + a]
                    if ab != bc and bc != cd and cd != da and da != ab:
                        out.append(ProperCycle((a, b, c, d), (ab, bc, cd, da)))
    return out
