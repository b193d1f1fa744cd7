"""Verification engine: exhaustive sweeps, sampling, workers, reports."""

import json

import pytest

from rainbowtri import GraphError, bell_number, verify_theorem
from rainbowtri.theorems import check_conclusion, check_hypothesis


def test_t8_exhaustive_k5():
    r = verify_theorem("T8", 5, mode="exhaustive")
    assert r.examined == 115_975 == bell_number(10)
    assert r.hypothesis_count == 41_508
    assert r.status == "verified" and not r.counterexamples


def test_t8_exhaustive_k4_finds_the_small_case_failures():
    # delta >= 2 = n/2 does not force a rainbow triangle at n=4; the verifier
    # must report those colorings honestly
    r = verify_theorem("T8", 4, mode="exhaustive")
    assert r.examined == 203
    assert r.hypothesis_count == 152
    assert r.status == "counterexample"
    assert len(r.counterexamples) == 12
    for g in r.counterexamples:
        assert check_hypothesis(g, "T8")
        assert not check_conclusion(g, "T8")[0]


def test_t1_exhaustive_k5():
    r = verify_theorem("T1", 5, mode="exhaustive")
    assert r.examined == 115_975 and r.status == "verified"
    assert r.hypothesis_count == 41_508  # 2d >= 6 equals 2d >= 5 for integers


def test_t10_exhaustive_k5():
    r = verify_theorem("T10", 5, mode="exhaustive")
    assert r.examined == 115_975
    assert r.hypothesis_count == 446
    assert r.status == "verified"


def test_t15_t16_exhaustive_k5():
    r15 = verify_theorem("T15", 5, mode="exhaustive")
    assert r15.status == "verified" and r15.hypothesis_count == 41_508
    r16 = verify_theorem("T16", 5, mode="exhaustive")
    assert r16.status == "verified"
    assert r16.hypothesis_count == 0  # vacuous: no rainbow-free delta>=3 K_5


def test_generic_path_theorems_exhaustive():
    # F4 and T5 have no kernel plan; the generic visitor path must agree on
    # counts and stay sound
    r = verify_theorem("F4", 4, k=1, mode="exhaustive")
    assert r.examined == 203
    assert r.status == "verified"
    r5 = verify_theorem("T5", 4, mode="exhaustive")
    assert r5.examined == 203
    assert r5.status == "verified"


def test_exhaustive_guards():
    with pytest.raises(GraphError, match="exhaustive"):
        verify_theorem("T8", 7, mode="exhaustive")
    with pytest.raises(GraphError, match="Bell"):
        verify_theorem("T8", 8, mode="exhaustive", allow_n7=True)
    with pytest.raises(GraphError, match="parameter k"):
        verify_theorem("T3", 5, mode="exhaustive")
    with pytest.raises(GraphError, match="mode"):
        verify_theorem("T8", 5, mode="sometimes")


def test_worker_determinism_exhaustive():
    a = verify_theorem("T8", 5, mode="exhaustive", workers=1)
    b = verify_theorem("T8", 5, mode="exhaustive", workers=2)
    assert a.canonical_json() == b.canonical_json()
    c = verify_theorem("T10", 5, mode="exhaustive", workers=2)
    assert c.hypothesis_count == 446


def test_worker_determinism_random():
    a = verify_theorem("T3", 9, k=2, mode="random", samples=400, seed=7, workers=1)
    b = verify_theorem("T3", 9, k=2, mode="random", samples=400, seed=7, workers=2)
    assert a.canonical_json() == b.canonical_json()
    assert a.examined == 400


def test_random_mode_reports_effective_counts():
    r = verify_theorem("T11", 8, mode="random", samples=300, seed=1)
    assert r.examined == 300
    assert 0 < r.hypothesis_count <= 300
    assert r.status == "verified"
    r14 = verify_theorem("T14", 7, mode="random", samples=300, seed=1)
    assert r14.status == "verified"
    assert 0 < r14.hypothesis_count <= 300  # general scope discards some


def test_random_mode_t10_mostly_vacuous():
    r = verify_theorem("T10", 7, mode="random", samples=200, seed=0)
    assert r.examined == 200
    assert r.hypothesis_count == 0  # random colorings are never rainbow-free
    assert r.status == "verified"


def test_report_json_schema():
    r = verify_theorem("T8", 4, mode="exhaustive")
    doc = json.loads(r.to_json())
    assert set(doc) == {"theorem", "n", "k", "mode", "examined",
                        "hypothesis_count", "counterexamples", "seed",
                        "workers", "wall_ms"}
    assert doc["counterexamples"][0].startswith("ecg 1\n")
    canon = json.loads(r.canonical_json())
    assert "wall_ms" not in canon and "workers" not in canon


def test_threshold_subset_relation():
    # 2d >= n+1 implies 2d >= n: T1's hypothesis set sits inside T8's
    r1 = verify_theorem("T1", 4, mode="exhaustive")
    r8 = verify_theorem("T8", 4, mode="exhaustive")
    assert r1.hypothesis_count <= r8.hypothesis_count
    # at n=5 the two thresholds coincide by integer parity
    assert verify_theorem("T1", 5, mode="exhaustive").hypothesis_count == \
        verify_theorem("T8", 5, mode="exhaustive").hypothesis_count


def test_examined_always_bell():
    for n in (3, 4, 5):
        for tid, k in (("T8", None), ("T3", 1), ("T10", None)):
            r = verify_theorem(tid, n, k=k, mode="exhaustive")
            assert r.examined == bell_number(n * (n - 1) // 2)
