"""Immutable edge-colored graph model with validation and degree/color queries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised when input data violates the edge-colored graph invariants."""


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """An immutable simple graph whose edges carry dense color ids 0..C-1.

    Vertices are ids 0..n-1.  Colors are always densified by first occurrence
    along the lexicographic edge order, so two colorings that differ only by a
    renaming of colors compare equal.  Instances are never mutated after
    construction; edits go through :class:`GraphBuilder`.
    """

    __slots__ = ("n", "m", "color_count", "is_complete",
                 "_pairs", "_colors", "_lookup", "_adj", "_cmat")

    def __init__(self, n: int, pairs: tuple[tuple[int, int], ...],
                 colors: tuple[int, ...], color_count: int):
        # internal constructor: callers go through validate()
        self.n = n
        self.m = len(pairs)
        self.color_count = color_count
        self.is_complete = self.m == n * (n - 1) // 2
        self._pairs = pairs
        self._colors = colors
        self._lookup = {p: c for p, c in zip(pairs, colors)}
        adj = [0] * n
        cmat = [-1] * (n * n)
        for (u, v), c in zip(pairs, colors):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            cmat[u * n + v] = c
            cmat[v * n + u] = c
        self._adj = adj
        self._cmat = cmat

    # -- queries ----------------------------------------------------------

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, color) with u < v in lexicographic order."""
        for (u, v), c in zip(self._pairs, self._colors):
            yield u, v, c

    def has_edge(self, u: int, v: int) -> bool:
        return _edge_key(u, v) in self._lookup

    def color_of(self, u: int, v: int) -> int:
        try:
            return self._lookup[_edge_key(u, v)]
        except KeyError:
            raise GraphError(f"no edge between {u} and {v}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        row = self._adj[v]
        return tuple(u for u in range(self.n) if row >> u & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return bin(self._adj[v]).count("1")

    def adjacency_row(self, v: int) -> int:
        """Neighbors of v as a bit row (bit u set iff uv is an edge)."""
        self._check_vertex(v)
        return self._adj[v]

    def color_matrix(self) -> list[int]:
        """Flat n*n matrix of colors, -1 where there is no edge (a copy)."""
        return list(self._cmat)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex id {v} out of range 0..{self.n - 1}")

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (self.n, self._pairs, self._colors) == (other.n, other._pairs, other._colors)

    def __hash__(self) -> int:
        return hash((self.n, self._pairs, self._colors))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m}, colors={self.color_count})"


def validate(edge_list: Iterable[tuple[int, int, int]], n: int) -> ColoredGraph:
    """Check a raw (u, v, color) list and build a canonical ColoredGraph.

    Colors may be arbitrary nonnegative integers; they are renumbered densely
    by first occurrence in lexicographic edge order.  Rejections name the
    offending entry.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds the supported maximum {MAX_VERTICES}")
    seen: dict[tuple[int, int], int] = {}
    for idx, entry in enumerate(edge_list):
        try:
            u, v, c = entry
        except (TypeError, ValueError):
            raise GraphError(f"entry {idx}: expected (u, v, color), got {entry!r}") from None
        if not all(isinstance(x, int) for x in (u, v, c)):
            raise GraphError(f"entry {idx}: non-integer field in {entry!r}")
        if u == v:
            raise GraphError(f"entry {idx}: self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"entry {idx}: vertex id out of range 0..{n - 1} in {entry!r}")
        if c < 0:
            raise GraphError(f"entry {idx}: negative color {c}")
        key = _edge_key(u, v)
        if key in seen:
            raise GraphError(f"entry {idx}: duplicate edge {key[0]}-{key[1]}")
        seen[key] = c
    pairs = tuple(sorted(seen))
    dense: dict[int, int] = {}
    colors = []
    for p in pairs:
        c = seen[p]
        if c not in dense:
            dense[c] = len(dense)
        colors.append(dense[c])
    return ColoredGraph(n, pairs, tuple(colors), len(dense))


def from_canonical_coloring(n: int, colors: Sequence[int]) -> ColoredGraph:
    """Fast constructor for a complete graph from an already-canonical coloring.

    ``colors`` follows the lexicographic edge order of K_n and must already be
    densified by first occurrence (a restricted growth string).
    """
    pairs = tuple((u, v) for u in range(n) for v in range(u + 1, n))
    if len(colors) != len(pairs):
        raise GraphError(f"expected {len(pairs)} colors for K_{n}, got {len(colors)}")
    ncolors = max(colors) + 1 if colors else 0
    return ColoredGraph(n, pairs, tuple(colors), ncolors)


class GraphBuilder:
    """Edited-copy builder: the one sanctioned way to derive a modified graph."""

    def __init__(self, graph: Optional[ColoredGraph] = None, n: Optional[int] = None):
        if graph is not None:
            self.n = graph.n
            self._edges = {p: c for p, c in zip(graph._pairs, graph._colors)}
        elif n is not None:
            self.n = n
            self._edges = {}
        else:
            raise GraphError("GraphBuilder needs a graph or a vertex count")

    def set_color(self, u: int, v: int, color: int) -> "GraphBuilder":
        key = _edge_key(u, v)
        if key not in self._edges:
            raise GraphError(f"no edge between {u} and {v}")
        self._edges[key] = color
        return self

    def add_edge(self, u: int, v: int, color: int) -> "GraphBuilder":
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = _edge_key(u, v)
        if key in self._edges:
            raise GraphError(f"edge {key[0]}-{key[1]} already present")
        self._edges[key] = color
        return self

    def remove_edge(self, u: int, v: int) -> "GraphBuilder":
        key = _edge_key(u, v)
        if key not in self._edges:
            raise GraphError(f"no edge between {u} and {v}")
        del self._edges[key]
        return self

    def build(self) -> ColoredGraph:
        return validate([(u, v, c) for (u, v), c in self._edges.items()], self.n)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree, color-degree and monochromatic-degree of a graph."""

    degree: tuple[int, ...]
    color_degree: tuple[int, ...]
    mono_degree: tuple[int, ...]
    min_color_degree: int
    max_mono_degree: int

    @classmethod
    def from_graph(cls, g: ColoredGraph) -> "DegreeProfile":
        degree = []
        cdeg = []
        mdeg = []
        for v in range(g.n):
            counts: dict[int, int] = {}
            row = g._adj[v]
            for u in range(g.n):
                if row >> u & 1:
                    c = g._cmat[v * g.n + u]
                    counts[c] = counts.get(c, 0) + 1
            degree.append(sum(counts.values()))
            cdeg.append(len(counts))
            mdeg.append(max(counts.values()) if counts else 0)
        return cls(
            degree=tuple(degree),
            color_degree=tuple(cdeg),
            mono_degree=tuple(mdeg),
            min_color_degree=min(cdeg),
            max_mono_degree=max(mdeg),
        )


def color_degree(g: ColoredGraph, v: int) -> int:
    """Number of distinct colors on edges incident to v."""
    g._check_vertex(v)
    return len({g._cmat[v * g.n + u] for u in g.neighbors(v)})


def mono_degree(g: ColoredGraph, v: int) -> int:
    """Largest number of edges of one color incident to v."""
    g._check_vertex(v)
    counts: dict[int, int] = {}
    for u in g.neighbors(v):
        c = g._cmat[v * g.n + u]
        counts[c] = counts.get(c, 0) + 1
    return max(counts.values()) if counts else 0


def neighbor_color_classes(g: ColoredGraph, v: int) -> list[tuple[int, tuple[int, ...]]]:
    """Partition of N(v) by incident-edge color.

    Returns (color, vertices) pairs ordered by ascending class size, ties
    broken by color id.
    """
    g._check_vertex(v)
    classes: dict[int, list[int]] = {}
    for u in g.neighbors(v):
        classes.setdefault(g._cmat[v * g.n + u], []).append(u)
    out = [(c, tuple(sorted(vs))) for c, vs in classes.items()]
    out.sort(key=lambda item: (len(item[1]), item[0]))
    return out


def colors_between(g: ColoredGraph, s: Iterable[int], t: Iterable[int]) -> set[int]:
    """C(S, T): colors on present edges with one end in S and the other in T."""
    s_set, t_set = set(s), set(t)
    if s_set & t_set:
        raise GraphError(f"vertex sets overlap: {sorted(s_set & t_set)}")
    for v in s_set | t_set:
        g._check_vertex(v)
    found = set()
    for u in s_set:
        for v in t_set:
            c = g._cmat[u * g.n + v]
            if c >= 0:
                found.add(c)
    return found
