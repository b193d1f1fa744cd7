"""Packing routines against subset-enumeration and matching-enumeration oracles."""

import pytest
from hypothesis import given, settings, strategies as st

from rainbowtri import (GraphError, edge_disjoint_at_vertex, enumerate_triangles,
                        gen_construction2, gen_random, gen_rainbow_complete,
                        max_disjoint_packing)
from rainbowtri.packing import two_disjoint_rainbow


def oracle_max_disjoint(g):
    """Maximum disjoint family by exhaustive include/exclude over all subsets
    of rainbow triangles (disjointness-pruned DFS visits every maximal one)."""
    tris = [t.vertices for t in enumerate_triangles(g, rainbow_only=True)]
    masks = [1 << a | 1 << b | 1 << c for a, b, c in tris]
    best = 0

    def dfs(i, used, size):
        nonlocal best
        best = max(best, size)
        for j in range(i, len(masks)):
            if not masks[j] & used:
                dfs(j + 1, used | masks[j], size + 1)

    dfs(0, 0, 0)
    return best


def oracle_edge_disjoint_at(g, v):
    """All matchings of the rainbow link graph at v, enumerated directly."""
    nbrs = [u for u in range(g.n) if g.has_edge(v, u)]
    links = []
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                continue
            a, b, c = g.color_of(v, x), g.color_of(v, y), g.color_of(x, y)
            if a != b and a != c and b != c:
                links.append((x, y))
    best = 0

    def dfs(i, used, size):
        nonlocal best
        best = max(best, size)
        if i == len(links):
            return
        dfs(i + 1, used, size)
        x, y = links[i]
        if not used >> x & 1 and not used >> y & 1:
            dfs(i + 1, used | 1 << x | 1 << y, size + 1)

    dfs(0, 0, 0)
    return best


def test_rainbow_complete_closed_forms():
    for n in range(3, 13):
        g = gen_rainbow_complete(n)
        assert max_disjoint_packing(g, "exact").size == n // 3
        assert edge_disjoint_at_vertex(g, 0).size == (n - 1) // 2


def test_exact_matches_subset_oracle_on_seeded_k9():
    g = gen_random(9, 5, 7)
    assert max_disjoint_packing(g, "exact").size == oracle_max_disjoint(g)


def test_edge_disjoint_matches_matching_oracle_on_seeded_k8():
    g = gen_random(8, 6, 3)
    for v in range(8):
        assert edge_disjoint_at_vertex(g, v).size == oracle_edge_disjoint_at(g, v)


def test_construction_hub_has_empty_link():
    g = gen_construction2(4)
    assert edge_disjoint_at_vertex(g, 0).size == 0


def test_exact_mode_guard():
    g = gen_rainbow_complete(31)
    with pytest.raises(GraphError, match="greedy"):
        max_disjoint_packing(g, "exact")
    with pytest.raises(GraphError, match="mode"):
        max_disjoint_packing(gen_rainbow_complete(4), "fast")


def test_packing_invariants_on_output():
    g = gen_random(9, 4, 11)
    packing = max_disjoint_packing(g, "exact")
    seen = set()
    for t in packing.triangles:
        assert t.rainbow
        assert not seen & set(t.vertices)
        seen |= set(t.vertices)
    at0 = edge_disjoint_at_vertex(g, 0)
    used_edges = set()
    for t in at0.triangles:
        assert 0 in t.vertices and t.rainbow
        edges = {frozenset(p) for p in
                 [(t.vertices[0], t.vertices[1]), (t.vertices[0], t.vertices[2]),
                  (t.vertices[1], t.vertices[2])]}
        assert not edges & used_edges
        used_edges |= edges


@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=4, max_value=9),
       st.integers(min_value=2, max_value=9))
@settings(max_examples=40, deadline=None)
def test_exact_vs_oracle_and_greedy(seed, n, colors):
    g = gen_random(n, colors, seed)
    exact = max_disjoint_packing(g, "exact").size
    greedy = max_disjoint_packing(g, "greedy").size
    assert exact == oracle_max_disjoint(g)
    assert greedy <= exact
    assert exact <= n // 3
    pair = two_disjoint_rainbow(g)
    assert (pair is not None) == (exact >= 2)


@given(st.integers(min_value=0, max_value=10**6), st.floats(min_value=0.3, max_value=0.9))
@settings(max_examples=30, deadline=None)
def test_general_graphs_edge_disjoint_oracle(seed, p):
    g = gen_random(8, 5, seed, p)
    for v in range(0, 8, 3):
        assert edge_disjoint_at_vertex(g, v).size == oracle_edge_disjoint_at(g, v)
