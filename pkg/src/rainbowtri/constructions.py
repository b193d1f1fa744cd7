"""Generators for the extremal colorings plus random/baseline samplers.

All generators are deterministic functions of their arguments; the random
samplers derive their state from string-seeded PRNGs so identical arguments
give bit-identical graphs across processes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .graph import ColoredGraph, DegreeProfile, GraphError, validate

Completeness = Union[str, float]  # "complete" or an edge probability


# ---------------------------------------------------------------------------
# hub construction: complete graph of order 2p where the hub meets no
# rainbow triangle although every vertex sees p distinct colors
# ---------------------------------------------------------------------------

def gen_construction2(p: int) -> ColoredGraph:
    """Complete graph of order 2p with min color-degree exactly p whose hub
    vertex lies in no rainbow triangle.

    Hub classes: one singleton plus p-1 pairs, the hub edge to class i carrying
    color i.  Between two pair-classes i < j, the parallel matching carries the
    smaller class color i and the crossed matching carries j; the singleton
    sends color i to class i.  Each pair's internal edge takes a fresh color
    (one fresh color per class, so 2p-1 colors in total).
    """
    if p < 2:
        raise GraphError(f"construction requires p >= 2, got {p}")
    n = 2 * p
    hub = 0
    single = 1
    pair = {i: (2 * i, 2 * i + 1) for i in range(1, p)}
    edges = [(hub, single, 0)]
    for i in range(1, p):
        a, b = pair[i]
        edges.append((hub, a, i))
        edges.append((hub, b, i))
        edges.append((single, a, i))
        edges.append((single, b, i))
        edges.append((a, b, p + i - 1))  # fresh color for this class
    for i in range(1, p):
        for j in range(i + 1, p):
            ai, bi = pair[i]
            aj, bj = pair[j]
            edges.append((ai, aj, i))
            edges.append((bi, bj, i))
            edges.append((ai, bj, j))
            edges.append((bi, aj, j))
    return validate(edges, n)


# ---------------------------------------------------------------------------
# rainbow-free extremal structure for odd n: hub + (n-1)/2 colored pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Thm10Certificate:
    """Witness of the hub-and-pairs structure of a rainbow-free coloring."""

    hub: int
    pairs: tuple[tuple[int, int], ...]
    part_colors: tuple[int, ...]


def gen_extremal_thm10(n: int) -> ColoredGraph:
    """Complete graph on odd n >= 5 realizing the hub-and-pairs structure.

    Parts: hub {0} and pairs A_i = (2i-1, 2i).  Hub edges to A_i and A_i's
    internal edge carry color i-1.  Between A_i and A_j (i < j) the parallel
    matching carries A_i's color and the crossed matching A_j's color.
    """
    if n < 5 or n % 2 == 0:
        raise GraphError(f"structure requires odd n >= 5, got {n}")
    t = (n - 1) // 2
    edges = []
    pairs = [(2 * i - 1, 2 * i) for i in range(1, t + 1)]
    for i, (a, b) in enumerate(pairs):
        edges.append((0, a, i))
        edges.append((0, b, i))
        edges.append((a, b, i))
    for i in range(t):
        for j in range(i + 1, t):
            ai, bi = pairs[i]
            aj, bj = pairs[j]
            edges.append((ai, aj, i))
            edges.append((bi, bj, i))
            edges.append((ai, bj, j))
            edges.append((bi, aj, j))
    return validate(edges, n)


def check_thm10_properties(g: ColoredGraph, cert: Thm10Certificate) -> bool:
    """Re-check the structure properties directly against the graph.

    Independent of the recognizer's internal state; used to audit certificates.

    For t = (n-1)/2 >= 3 this is the full structure: every vertex has
    color-degree t, cross colors between two pairs are contained in the two
    part colors, and each pair's internal edge carries its own part color.
    For t = 2 (n = 5) the internal-edge and degree conditions are provably
    too strong: exhaustive enumeration exhibits rainbow-free colorings with
    minimum color-degree 2 whose internal edges carry a fresh color and whose
    vertices exceed color-degree 2.  The correct n = 5 conditions keep the
    cross containment and require, for each pair and each outside vertex, that
    the internal edge and the two cross edges never take three distinct colors.
    """
    n = g.n
    if n % 2 == 0 or not g.is_complete:
        return False
    t = (n - 1) // 2
    parts = [(cert.hub,)] + [tuple(p) for p in cert.pairs]
    covered = sorted(v for part in parts for v in part)
    if covered != list(range(n)):
        return False
    if len(cert.pairs) != t or any(len(p) != 2 for p in cert.pairs):
        return False
    if len(set(cert.part_colors)) != t:
        return False
    if t >= 3:
        profile = DegreeProfile.from_graph(g)
        if any(d != t for d in profile.color_degree):
            return False
    cm = g._cmat
    for i, (a, b) in enumerate(cert.pairs):
        ci = cert.part_colors[i]
        if cm[cert.hub * n + a] != ci or cm[cert.hub * n + b] != ci:
            return False
        internal = cm[a * n + b]
        if t >= 3 and internal != ci:
            return False
        for j, (x, y) in enumerate(cert.pairs):
            if i == j:
                continue
            cj = cert.part_colors[j]
            for u in (a, b):
                if cm[u * n + x] not in (ci, cj) or cm[u * n + y] not in (ci, cj):
                    return False
        if t <= 2:
            for j, (x, y) in enumerate(cert.pairs):
                if i == j:
                    continue
                for z in (x, y):
                    trio = {internal, cm[a * n + z], cm[b * n + z]}
                    if len(trio) == 3:
                        return False
    return True


def recognize_thm10(g: ColoredGraph) -> Optional[Thm10Certificate]:
    """Find a hub realizing the rainbow-free extremal structure, if any.

    Hubs are tried in ascending id order and the first matching certificate is
    returned.  The check is purely structural; it does not test whether the
    graph actually has rainbow triangles.
    """
    if not g.is_complete:
        raise GraphError("recognition requires a complete graph")
    n = g.n
    if n % 2 == 0 or n < 3:
        return None
    t = (n - 1) // 2
    if t >= 3:
        profile = DegreeProfile.from_graph(g)
        if any(d != t for d in profile.color_degree):
            return None
    cm = g._cmat
    for hub in range(n):
        classes: dict[int, list[int]] = {}
        for u in range(n):
            if u != hub:
                classes.setdefault(cm[hub * n + u], []).append(u)
        if len(classes) != t or any(len(vs) != 2 for vs in classes.values()):
            continue
        part_colors = tuple(sorted(classes))
        pairs = tuple(tuple(sorted(classes[c])) for c in part_colors)
        cert = Thm10Certificate(hub, pairs, part_colors)
        if check_thm10_properties(g, cert):
            return cert
    return None


# ---------------------------------------------------------------------------
# baselines
# ---------------------------------------------------------------------------

def gen_pc_bipartite(n: int) -> ColoredGraph:
    """Properly colored complete bipartite K_{n/2,n/2} (round-robin coloring)."""
    if n < 4 or n % 2 == 1:
        raise GraphError(f"balanced bipartite baseline requires even n >= 4, got {n}")
    half = n // 2
    edges = []
    for u in range(half):
        for w in range(half):
            edges.append((u, half + w, (u + w) % half))
    return validate(edges, n)


def gen_rainbow_complete(n: int) -> ColoredGraph:
    """K_n with all n(n-1)/2 edge colors distinct."""
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    edges = []
    c = 0
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v, c))
            c += 1
    return validate(edges, n)


def _rng(*key: object) -> random.Random:
    return random.Random(":".join(str(k) for k in key))


def gen_random(n: int, color_count: int, seed: int,
               completeness: Completeness = "complete") -> ColoredGraph:
    """Uniform independent color per edge; deterministic in all arguments.

    ``completeness`` is either "complete" or an edge probability in (0, 1].
    Unused colors are re-densified by validation.
    """
    if color_count < 1:
        raise GraphError(f"need at least one color, got {color_count}")
    rng = _rng("gen_random", n, color_count, seed, completeness)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if completeness != "complete" and rng.random() >= float(completeness):
                continue
            edges.append((u, v, rng.randrange(color_count)))
    return validate(edges, n)


def _proper_complete_coloring(n: int) -> dict[tuple[int, int], int]:
    """A proper edge coloring of K_n (n colors for odd n, n-1 for even)."""
    colors: dict[tuple[int, int], int] = {}
    if n % 2 == 1:
        for u in range(n):
            for v in range(u + 1, n):
                colors[(u, v)] = (u + v) % n
    else:
        k = n - 1
        for u in range(k):
            for v in range(u + 1, k):
                colors[(u, v)] = (u + v) % k
            colors[(u, k)] = (2 * u) % k
    return colors


def _biased_flat(n: int, target_delta: int, seed: int,
                 completeness: Completeness) -> Optional[list[int]]:
    """Core of the biased sampler: flat color matrix, or None when infeasible.

    Starts from a (vertex-permuted) proper coloring restricted to the sampled
    edge set, then randomly merges color classes as long as every vertex keeps
    at least ``target_delta`` distinct incident colors.
    """
    rng = _rng("gen_biased", n, target_delta, seed, completeness)
    perm = list(range(n))
    rng.shuffle(perm)
    proper = _proper_complete_coloring(n)
    cmat = [-1] * (n * n)
    present = []
    for u in range(n):
        for v in range(u + 1, n):
            if completeness != "complete" and rng.random() >= float(completeness):
                continue
            c = proper[(min(perm[u], perm[v]), max(perm[u], perm[v]))]
            cmat[u * n + v] = c
            cmat[v * n + u] = c
            present.append((u, v))
    counts = [dict() for _ in range(n)]  # type: list[dict[int, int]]
    for u, v in present:
        c = cmat[u * n + v]
        counts[u][c] = counts[u].get(c, 0) + 1
        counts[v][c] = counts[v].get(c, 0) + 1
    if any(len(cnt) < target_delta for cnt in counts):
        return None
    palette = sorted({cmat[u * n + v] for u, v in present})
    class_edges: dict[int, list[tuple[int, int]]] = {c: [] for c in palette}
    for u, v in present:
        class_edges[cmat[u * n + v]].append((u, v))
    attempts = 3 * n
    for _ in range(attempts):
        live = [c for c in palette if class_edges.get(c)]
        if len(live) <= max(2, target_delta):
            break
        a, b = rng.sample(live, 2)
        moved = class_edges[b]
        ok = True
        for u, v in moved:
            for w in (u, v):
                counts[w][a] = counts[w].get(a, 0) + 1
                counts[w][b] -= 1
                if counts[w][b] == 0:
                    del counts[w][b]
        for u, v in moved:
            if len(counts[u]) < target_delta or len(counts[v]) < target_delta:
                ok = False
                break
        if ok:
            for u, v in moved:
                cmat[u * n + v] = a
                cmat[v * n + u] = a
            class_edges[a].extend(moved)
            class_edges[b] = []
        else:
            for u, v in moved:
                for w in (u, v):
                    counts[w][b] = counts[w].get(b, 0) + 1
                    counts[w][a] -= 1
                    if counts[w][a] == 0:
                        del counts[w][a]
    return cmat


def gen_biased_high_color_degree(n: int, target_delta: int, seed: int,
                                 completeness: Completeness = "complete"
                                 ) -> Optional[ColoredGraph]:
    """Seeded sampler conditioned on min color-degree >= target_delta.

    Returns None when the sampled edge set cannot reach the target (possible
    only for non-complete completeness); the complete case always succeeds.
    """
    if not 1 <= target_delta <= n - 1:
        raise GraphError(
            f"target color-degree must lie in 1..{n - 1}, got {target_delta}")
    cmat = _biased_flat(n, target_delta, seed, completeness)
    if cmat is None:
        return None
    edges = [(u, v, cmat[u * n + v])
             for u in range(n) for v in range(u + 1, n) if cmat[u * n + v] >= 0]
    g = validate(edges, n)
    profile = DegreeProfile.from_graph(g)
    if profile.min_color_degree < target_delta:
        return None
    return g
