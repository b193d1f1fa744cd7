"""Registry of the verifiable statements with exact integer hypotheses.

Every threshold is evaluated in the exact doubled form (2*d >= X), never by
floating division, so parity cases behave exactly as stated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .graph import ColoredGraph, DegreeProfile, GraphError
from .triangles import (all_pc_cycles_le4, exists_rainbow_triangle,
                        count_rainbow_per_vertex, find_pc_cycle_le4)
from .packing import edge_disjoint_at_vertex, max_disjoint_packing, two_disjoint_rainbow
from .constructions import check_thm10_properties, recognize_thm10


@dataclass(frozen=True)
class TheoremSpec:
    """Hypothesis/conclusion pair plus the exact thresholds that define them."""

    id: str
    scope: str                    # "complete" | "general"
    needs_k: bool
    # hypothesis 2*min color-degree >= delta2(n, k)
    delta2: Optional[Callable[[int, Optional[int]], int]] = None
    # hypothesis max mono-degree <= mono_max(n)
    mono_max: Optional[Callable[[int], int]] = None
    n_min: int = 0
    requires_rainbow_free: bool = False
    conclusion: Callable[[ColoredGraph, Optional[int]], tuple[bool, object]] = None
    kernel_mode: Optional[str] = None   # "exists" | "pervertex" | "collect_rfree"
    summary: str = ""


def _concl_every_vertex_k(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    counts = count_rainbow_per_vertex(g)
    need = k if k is not None else 1
    return min(counts) >= need, counts


def _concl_exists_rainbow(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    t = exists_rainbow_triangle(g)
    return t is not None, t


def _concl_edge_disjoint_k(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    sizes = [edge_disjoint_at_vertex(g, v).size for v in range(g.n)]
    return min(sizes) >= k, sizes


def _concl_thm10(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    cert = recognize_thm10(g)
    if cert is None:
        return False, None
    return check_thm10_properties(g, cert), cert


def _concl_two_disjoint(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    pair = two_disjoint_rainbow(g)
    return pair is not None, pair


def _concl_k_disjoint(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    packing = max_disjoint_packing(g, mode="exact")
    return packing.size >= k, packing


def _is_pc_balanced_bipartite(g: ColoredGraph) -> bool:
    n = g.n
    if n % 2 == 1:
        return False
    side = [-1] * n
    side[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for u in g.neighbors(v):
            if side[u] == -1:
                side[u] = 1 - side[v]
                queue.append(u)
            elif side[u] == side[v]:
                return False
    if any(s == -1 for s in side):
        return False
    if sum(side) * 2 != n:
        return False
    if g.m != (n // 2) ** 2:
        return False
    return DegreeProfile.from_graph(g).max_mono_degree == 1


def _concl_bipartite_or_k4(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    if g.n == 4 and g.m >= 5:
        return True, "K4 exception"  # K_4 or K_4 minus one edge
    ok = _is_pc_balanced_bipartite(g)
    return ok, "pc balanced complete bipartite" if ok else None


def _concl_pc_cycle(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    cyc = find_pc_cycle_le4(g)
    return cyc is not None, cyc


def _concl_two_pc_cycles(g: ColoredGraph, k: Optional[int]) -> tuple[bool, object]:
    cycles = all_pc_cycles_le4(g)
    masks = [sum(1 << v for v in c.vertices) for c in cycles]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if not masks[i] & masks[j]:
                return True, (cycles[i], cycles[j])
    return False, None


THEOREMS: dict[str, TheoremSpec] = {
    spec.id: spec for spec in [
        TheoremSpec(
            id="T1", scope="complete", needs_k=False,
            delta2=lambda n, k: n + 1,
            conclusion=_concl_every_vertex_k, kernel_mode="pervertex",
            summary="2d >= n+1 puts every vertex in a rainbow triangle"),
        TheoremSpec(
            id="T3", scope="complete", needs_k=True,
            delta2=lambda n, k: n + k,
            conclusion=_concl_every_vertex_k, kernel_mode="pervertex",
            summary="2d >= n+k puts every vertex in k rainbow triangles"),
        TheoremSpec(
            id="F4", scope="complete", needs_k=True,
            delta2=lambda n, k: n - 1 + 2 * k,
            conclusion=_concl_edge_disjoint_k,
            summary="2d >= n-1+2k gives k edge-disjoint rainbow triangles at each vertex"),
        TheoremSpec(
            id="T8", scope="complete", needs_k=False,
            delta2=lambda n, k: n,
            conclusion=_concl_exists_rainbow, kernel_mode="exists",
            summary="2d >= n forces a rainbow triangle in a complete graph"),
        TheoremSpec(
            id="T10", scope="complete", needs_k=False,
            delta2=lambda n, k: n - 1, requires_rainbow_free=True,
            conclusion=_concl_thm10, kernel_mode="collect_rfree",
            summary="rainbow-free with 2d >= n-1 has the hub-and-pairs structure"),
        TheoremSpec(
            id="T11", scope="complete", needs_k=False,
            delta2=lambda n, k: n + 1, n_min=8,
            conclusion=_concl_two_disjoint,
            summary="n >= 8 and 2d >= n+1 give two vertex-disjoint rainbow triangles"),
        TheoremSpec(
            id="F13", scope="complete", needs_k=True,
            delta2=lambda n, k: n - 3 + 3 * k,
            conclusion=_concl_k_disjoint,
            summary="2d >= n-3+3k gives k vertex-disjoint rainbow triangles"),
        TheoremSpec(
            id="T14", scope="general", needs_k=False,
            delta2=lambda n, k: n + 2, n_min=7,
            conclusion=_concl_two_disjoint,
            summary="n >= 7 and 2d >= n+2 give two vertex-disjoint rainbow triangles"),
        TheoremSpec(
            id="T15", scope="general", needs_k=False,
            delta2=lambda n, k: n + 1,
            conclusion=_concl_exists_rainbow, kernel_mode="exists",
            summary="2d >= n+1 forces a rainbow triangle in any graph"),
        TheoremSpec(
            id="T16", scope="general", needs_k=False,
            delta2=lambda n, k: n, requires_rainbow_free=True,
            conclusion=_concl_bipartite_or_k4, kernel_mode="collect_rfree",
            summary="rainbow-free with 2d >= n is a properly colored balanced "
                    "complete bipartite graph (or a K4 variant at n=4)"),
        TheoremSpec(
            id="T5", scope="complete", needs_k=False,
            mono_max=lambda n: n - 2,
            conclusion=_concl_pc_cycle,
            summary="mono-degree <= n-2 gives a properly colored cycle of length <= 4"),
        TheoremSpec(
            id="T6", scope="complete", needs_k=False,
            mono_max=lambda n: n - 5,
            conclusion=_concl_two_pc_cycles,
            summary="mono-degree <= n-5 gives two disjoint properly colored "
                    "cycles of length <= 4"),
    ]
}


def get_theorem(theorem_id: str) -> TheoremSpec:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise GraphError(
            f"unknown theorem id {theorem_id!r}; "
            f"known: {', '.join(sorted(THEOREMS))}") from None


def _check_scope(g: ColoredGraph, spec: TheoremSpec) -> None:
    if spec.scope == "complete" and not g.is_complete:
        raise GraphError(f"{spec.id} applies to complete graphs only")


def check_hypothesis(g: ColoredGraph, theorem_id: str, k: Optional[int] = None) -> bool:
    """Exact integer evaluation of the theorem's hypothesis on g."""
    spec = get_theorem(theorem_id)
    _check_scope(g, spec)
    if spec.needs_k and k is None:
        raise GraphError(f"{spec.id} needs the parameter k")
    if g.n < spec.n_min:
        return False
    profile = DegreeProfile.from_graph(g)
    if spec.delta2 is not None:
        if 2 * profile.min_color_degree < spec.delta2(g.n, k):
            return False
    if spec.mono_max is not None:
        if profile.max_mono_degree > spec.mono_max(g.n):
            return False
    if spec.requires_rainbow_free:
        if exists_rainbow_triangle(g) is not None:
            return False
    return True


def check_conclusion(g: ColoredGraph, theorem_id: str,
                     k: Optional[int] = None) -> tuple[bool, object]:
    """Evaluate the theorem's conclusion on g; returns (holds, witness)."""
    spec = get_theorem(theorem_id)
    _check_scope(g, spec)
    if spec.needs_k and k is None:
        raise GraphError(f"{spec.id} needs the parameter k")
    return spec.conclusion(g, k)
