"""Graph model: validation, degree queries, color sets, builder."""

import pytest
from hypothesis import given, settings, strategies as st

from rainbowtri import (ColoredGraph, DegreeProfile, GraphBuilder, GraphError,
                        color_degree, colors_between, gen_construction2,
                        gen_rainbow_complete, mono_degree,
                        neighbor_color_classes, validate)


def mono_k(n):
    return validate([(u, v, 0) for u in range(n) for v in range(u + 1, n)], n)


def test_validate_densifies_by_first_occurrence():
    g = validate([(0, 1, 7), (0, 2, 7), (1, 2, 9)], 3)
    assert [c for _, _, c in g.edges()] == [0, 0, 1]
    assert g.color_count == 2
    assert g.is_complete


def test_validate_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        validate([(0, 0, 1)], 1)


def test_validate_rejects_duplicate_pair():
    with pytest.raises(GraphError, match="duplicate"):
        validate([(0, 1, 1), (1, 0, 2)], 2)


def test_validate_rejects_bad_vertex_and_color():
    with pytest.raises(GraphError, match="out of range"):
        validate([(0, 5, 1)], 3)
    with pytest.raises(GraphError, match="negative color"):
        validate([(0, 1, -2)], 2)
    with pytest.raises(GraphError, match="positive integer"):
        validate([], 0)
    with pytest.raises(GraphError, match="maximum"):
        validate([], 100)


def test_isolated_vertices_allowed():
    g = validate([(0, 1, 0)], 4)
    p = DegreeProfile.from_graph(g)
    assert p.color_degree == (1, 1, 0, 0)
    assert p.min_color_degree == 0


def test_color_degree_examples():
    rain5 = gen_rainbow_complete(5)
    assert all(color_degree(rain5, v) == 4 for v in range(5))
    m4 = mono_k(4)
    assert all(color_degree(m4, v) == 1 for v in range(4))
    c2 = gen_construction2(4)
    assert DegreeProfile.from_graph(c2).min_color_degree == 4
    assert all(color_degree(c2, v) == 4 for v in range(8))


def test_mono_degree_examples():
    assert all(mono_degree(mono_k(5), v) == 4 for v in range(5))
    assert all(mono_degree(gen_rainbow_complete(5), v) == 1 for v in range(5))
    assert mono_degree(gen_construction2(4), 0) == 2  # hub classes are pairs


def test_neighbor_color_classes_ordering():
    c2 = gen_construction2(3)
    sizes = [len(vs) for _, vs in neighbor_color_classes(c2, 0)]
    assert sizes == [1, 2, 2]
    m4 = mono_k(4)
    assert [len(vs) for _, vs in neighbor_color_classes(m4, 0)] == [3]
    rain4 = gen_rainbow_complete(4)
    assert [len(vs) for _, vs in neighbor_color_classes(rain4, 0)] == [1, 1, 1]


def test_colors_between():
    rain4 = gen_rainbow_complete(4)
    assert len(colors_between(rain4, {0}, {1, 2})) == 2
    m5 = mono_k(5)
    assert colors_between(m5, {0, 1}, {3, 4}) == {0}
    with pytest.raises(GraphError, match="overlap"):
        colors_between(rain4, {0, 1}, {1, 2})


def test_colors_between_no_edges():
    g = validate([(0, 1, 0)], 4)
    assert colors_between(g, {2}, {3}) == set()


def test_builder_edit_cycle():
    g = gen_rainbow_complete(4)
    # merging two color classes is a genuine change; a fresh color would not
    # be (colorings are compared up to renaming)
    g2 = GraphBuilder(g).set_color(0, 1, g.color_of(2, 3)).build()
    assert g2 != g
    assert GraphBuilder(g).set_color(0, 1, 99).build() == g
    assert g2.n == g.n and g2.m == g.m
    g3 = GraphBuilder(g).remove_edge(0, 1).build()
    assert g3.m == g.m - 1
    g4 = GraphBuilder(g3).add_edge(0, 1, 0).build()
    assert g4.m == g.m
    with pytest.raises(GraphError):
        GraphBuilder(g).add_edge(0, 1, 5)
    with pytest.raises(GraphError):
        GraphBuilder(g).remove_edge(0, 0)


def test_graph_equality_up_to_color_renaming():
    a = validate([(0, 1, 5), (0, 2, 5), (1, 2, 9)], 3)
    b = validate([(0, 1, 0), (0, 2, 0), (1, 2, 3)], 3)
    assert a == b
    assert hash(a) == hash(b)


# -- property tests ---------------------------------------------------------

@st.composite
def raw_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(all_pairs), unique=True, max_size=len(all_pairs))
                  if all_pairs else st.just([]))
    edges = [(u, v, draw(st.integers(min_value=0, max_value=6))) for u, v in chosen]
    return n, edges


@given(raw_graphs())
@settings(max_examples=120, deadline=None)
def test_class_sizes_sum_to_degree(raw):
    n, edges = raw
    g = validate(edges, n)
    for v in range(n):
        classes = neighbor_color_classes(g, v)
        assert sum(len(vs) for _, vs in classes) == g.degree(v)
        assert color_degree(g, v) == len(classes)


@given(raw_graphs())
@settings(max_examples=120, deadline=None)
def test_profile_matches_per_vertex_queries(raw):
    n, edges = raw
    g = validate(edges, n)
    p = DegreeProfile.from_graph(g)
    for v in range(n):
        assert p.color_degree[v] == color_degree(g, v)
        assert p.mono_degree[v] == mono_degree(g, v)
        if g.degree(v):
            assert 1 <= p.color_degree[v] <= g.degree(v)
            assert p.color_degree[v] * p.mono_degree[v] >= g.degree(v)
    assert p.min_color_degree == min(p.color_degree)
    assert p.max_mono_degree == max(p.mono_degree)


@given(raw_graphs())
@settings(max_examples=100, deadline=None)
def test_validate_idempotent(raw):
    n, edges = raw
    g = validate(edges, n)
    again = validate(list(g.edges()), n)
    assert again == g


@given(raw_graphs(), st.data())
@settings(max_examples=80, deadline=None)
def test_colors_between_monotone(raw, data):
    n, edges = raw
    g = validate(edges, n)
    if n < 3:
        return
    verts = list(range(n))
    t = data.draw(st.sets(st.sampled_from(verts), min_size=1, max_size=n - 2))
    rest = [v for v in verts if v not in t]
    s = data.draw(st.sets(st.sampled_from(rest), min_size=1, max_size=len(rest)))
    x = [v for v in rest if v not in s]
    assert colors_between(g, s, t) <= colors_between(g, s | set(x), t)
