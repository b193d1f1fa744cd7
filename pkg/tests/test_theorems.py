"""Registry hypotheses and conclusions on known graphs."""

import pytest

from rainbowtri import (GraphError, THEOREMS, check_conclusion, check_hypothesis,
                        gen_construction2, gen_extremal_thm10, gen_pc_bipartite,
                        gen_rainbow_complete, validate)


def test_registry_ids():
    assert set(THEOREMS) == {"T1", "T3", "F4", "T8", "T10", "T11", "F13",
                             "T14", "T15", "T16", "T5", "T6"}


def test_hypothesis_exact_integer_thresholds():
    # 2*5 >= 10+1 is false: the bipartite baseline misses T15's bound
    assert not check_hypothesis(gen_pc_bipartite(10), "T15")
    # rainbow K_8: 2*7 >= 8+1
    assert check_hypothesis(gen_rainbow_complete(8), "T11")
    # extremal structure: delta = 2 = (5-1)/2 and rainbow-free
    assert check_hypothesis(gen_extremal_thm10(5), "T10")
    # parity case: T3 with k=2 at n=9 needs 2d >= 11, i.e. d >= 6
    g = gen_rainbow_complete(9)  # d = 8
    assert check_hypothesis(g, "T3", k=2)
    c2 = gen_construction2(4)    # n=8, d=4: 8 >= 8 meets T8 but not T1
    assert check_hypothesis(c2, "T8")
    assert not check_hypothesis(c2, "T1")


def test_hypothesis_n_floor():
    assert not check_hypothesis(gen_rainbow_complete(7), "T11")   # needs n >= 8
    assert not check_hypothesis(gen_rainbow_complete(6), "T14")   # needs n >= 7


def test_mono_degree_hypotheses():
    rain = gen_rainbow_complete(6)
    assert check_hypothesis(rain, "T5")
    assert check_hypothesis(rain, "T6")  # mono 1 <= 6-5
    mono = validate([(u, v, 0) for u in range(6) for v in range(u + 1, 6)], 6)
    assert not check_hypothesis(mono, "T5")


def test_conclusions_with_witnesses():
    ok, pair = check_conclusion(gen_rainbow_complete(6), "T11")
    assert ok and not set(pair[0].vertices) & set(pair[1].vertices)
    ok, counts = check_conclusion(gen_construction2(4), "T1")
    assert not ok and min(counts) == 0 and counts.index(0) == 0  # the hub
    ok, cert = check_conclusion(gen_extremal_thm10(5), "T10")
    assert ok and cert.hub == 0
    ok, cyc = check_conclusion(gen_rainbow_complete(5), "T5")
    assert ok and len(cyc.vertices) == 3
    ok, counts = check_conclusion(gen_rainbow_complete(7), "T3", k=3)
    assert ok  # every vertex of rainbow K_7 is in C(6,2)=15 rainbow triangles
    ok, sizes = check_conclusion(gen_rainbow_complete(7), "F4", k=3)
    assert ok and min(sizes) == 3
    ok, packing = check_conclusion(gen_rainbow_complete(9), "F13", k=3)
    assert ok and packing.size == 3


def test_t16_conclusion_forms():
    assert check_conclusion(gen_pc_bipartite(8), "T16")[0]
    assert not check_conclusion(gen_rainbow_complete(6), "T16")[0]
    # the n=4 exceptions: K_4 and K_4 minus an edge, any coloring
    k4 = validate([(0, 1, 0), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1),
                   (2, 3, 0)], 4)
    assert check_conclusion(k4, "T16")[0]
    k4e = validate([(0, 1, 0), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)], 4)
    assert check_conclusion(k4e, "T16")[0]
    # an unbalanced bipartite graph is not accepted
    k13 = validate([(0, 1, 0), (0, 2, 1), (0, 3, 2)], 4)
    assert not check_conclusion(k13, "T16")[0]


def test_t6_two_disjoint_pc_cycles():
    ok, pair = check_conclusion(gen_rainbow_complete(8), "T6")
    assert ok
    a, b = pair
    assert not set(a.vertices) & set(b.vertices)


def test_scope_and_k_errors():
    bip = gen_pc_bipartite(6)
    with pytest.raises(GraphError, match="complete"):
        check_hypothesis(bip, "T8")
    with pytest.raises(GraphError, match="parameter k"):
        check_hypothesis(gen_rainbow_complete(5), "T3")
    with pytest.raises(GraphError, match="unknown theorem"):
        check_hypothesis(bip, "T99")
