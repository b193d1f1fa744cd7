"""Theorem verification: exhaustive canonical sweeps and hypothesis-conditioned sampling.

Reports are deterministic functions of (theorem, n, k, mode, samples, seed):
exhaustive work is sharded by RGS prefix and merged in prefix order, random
samples derive per-index seeds, so any worker count produces the same report
content (only the recorded worker count and wall time vary).
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Optional

from . import _kernel
from .bell import bell_number
from .constructions import gen_biased_high_color_degree, gen_random
from .ecg import parse_ecg, write_ecg
from .enumeration import (ENUM_MAX_N, enumerate_canonical_colorings,
                          shard_depth_for, shard_prefixes)
from .graph import ColoredGraph, DegreeProfile, GraphError, from_canonical_coloring
from .theorems import TheoremSpec, check_conclusion, check_hypothesis, get_theorem

EXHAUSTIVE_DEFAULT_MAX_N = 6


@dataclass
class VerificationReport:
    """Outcome of one verification run, serializable as JSON."""

    theorem: str
    n: int
    k: Optional[int]
    mode: str
    examined: int
    hypothesis_count: int
    counterexamples: list[ColoredGraph] = field(default_factory=list)
    seed: Optional[int] = None
    workers: int = 1
    wall_ms: float = 0.0

    @property
    def status(self) -> str:
        return "verified" if not self.counterexamples else "counterexample"

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "examined": self.examined,
            "hypothesis_count": self.hypothesis_count,
            "counterexamples": [write_ecg(g) for g in self.counterexamples],
            "seed": self.seed,
            "workers": self.workers,
            "wall_ms": self.wall_ms,
        }

    def canonical_json(self) -> str:
        """Deterministic serialization: excludes wall time and worker count."""
        d = self.to_json_dict()
        del d["wall_ms"]
        del d["workers"]
        return json.dumps(d, sort_keys=True)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


# ---------------------------------------------------------------------------
# exhaustive mode
# ---------------------------------------------------------------------------

_KERNEL_MODES = {
    "exists": _kernel.MODE_EXISTS,
    "pervertex": _kernel.MODE_PERVERTEX,
    "collect_rfree": _kernel.MODE_COLLECT_RFREE,
}


def _sweep_shard(args: tuple) -> tuple[int, int, list, list]:
    n, min_cd2, mode, k, prefix = args
    return _kernel.sweep(n, min_cd2, mode, k, prefix)


def _run_shards(n: int, min_cd2: int, mode: int, k: int,
                workers: int) -> tuple[int, int, list, list]:
    prefixes = shard_prefixes(n, shard_depth_for(n))
    args = [(n, min_cd2, mode, k, p) for p in prefixes]
    if workers <= 1 or len(args) <= 1:
        results = [_sweep_shard(a) for a in args]
    else:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_sweep_shard, args)
    examined = 0
    hyp = 0
    counter: list[tuple[int, ...]] = []
    collected: list[tuple[int, ...]] = []
    for ex, hy, ce, co in results:
        examined += ex
        hyp += hy
        counter.extend(ce)
        collected.extend(co)
    return examined, hyp, counter, collected


def _exhaustive(spec: TheoremSpec, n: int, k: Optional[int],
                workers: int) -> tuple[int, int, list[ColoredGraph]]:
    if spec.kernel_mode is not None and spec.delta2 is not None:
        min_cd2 = spec.delta2(n, k)
        if n < spec.n_min:
            min_cd2 = 2 * n  # hypothesis unsatisfiable: sweep only counts
        mode = _KERNEL_MODES[spec.kernel_mode]
        examined, hyp, counter, collected = _run_shards(
            n, min_cd2, mode, k if k is not None else 1, workers)
        bad: list[ColoredGraph] = []
        if spec.kernel_mode == "collect_rfree":
            for rgs in collected:
                g = from_canonical_coloring(n, rgs)
                ok, _witness = check_conclusion(g, spec.id, k)
                if not ok:
                    bad.append(g)
        else:
            for rgs in counter:
                g = from_canonical_coloring(n, rgs)
                if not check_hypothesis(g, spec.id, k):
                    raise AssertionError(
                        f"kernel reported a non-hypothesis coloring for {spec.id}")
                ok, _witness = check_conclusion(g, spec.id, k)
                if ok:
                    raise AssertionError(
                        f"kernel counterexample for {spec.id} passes re-check")
                bad.append(g)
        return examined, hyp, bad

    # generic path: full enumeration with per-leaf hypothesis/conclusion checks
    examined = 0
    hyp = 0
    bad = []

    def visit(state) -> None:
        nonlocal examined, hyp
        examined += 1
        g = state.as_graph()
        if not check_hypothesis(g, spec.id, k):
            return
        hyp += 1
        ok, _witness = check_conclusion(g, spec.id, k)
        if not ok:
            bad.append(g)

    enumerate_canonical_colorings(n, "complete", visit)
    return examined, hyp, bad


# ---------------------------------------------------------------------------
# random mode
# ---------------------------------------------------------------------------

def _sample_graph(spec: TheoremSpec, n: int, k: Optional[int],
                  seed: int, index: int) -> Optional[ColoredGraph]:
    """Draw one hypothesis-biased sample; None when the sampler fails."""
    import random as _random
    tag = f"{spec.id}:{seed}:{index}"
    if spec.delta2 is not None:
        x2 = spec.delta2(n, k)
        target = min((x2 + 1) // 2, n - 1)
        target = max(target, 1)
        if spec.scope == "general":
            rng = _random.Random("completeness:" + tag)
            completeness: object = 0.75 + 0.25 * rng.random()
        else:
            completeness = "complete"
        return gen_biased_high_color_degree(n, target, hash_seed(tag), completeness)
    # mono-degree hypotheses: plain uniform sampler, filtered by the caller
    return gen_random(n, max(2, n - 1), hash_seed(tag))


def hash_seed(tag: str) -> int:
    # stable string-to-int seed (process-independent)
    h = 2166136261
    for ch in tag:
        h = (h ^ ord(ch)) * 16777619 % (1 << 32)
    return h


def _random_chunk(args: tuple) -> tuple[int, int, list[str]]:
    theorem_id, n, k, seed, lo, hi = args
    spec = get_theorem(theorem_id)
    examined = 0
    hyp = 0
    bad: list[str] = []
    fast_mode = spec.kernel_mode if spec.kernel_mode in ("exists", "pervertex") else None
    for i in range(lo, hi):
        examined += 1
        g = _sample_graph(spec, n, k, seed, i)
        if g is None:
            continue
        if not check_hypothesis(g, theorem_id, k):
            continue
        hyp += 1
        if fast_mode == "exists":
            ok = _kernel.exists_rainbow(g.n, g._cmat)
        elif fast_mode == "pervertex":
            counts = _kernel.pervertex_rainbow(g.n, g._cmat)
            ok = min(counts) >= (k if k is not None else 1)
        elif spec.id in ("T11", "T14"):
            ok = _kernel.two_disjoint_rainbow(g.n, g._cmat)
        else:
            ok, _witness = check_conclusion(g, theorem_id, k)
        if not ok:
            ok_slow, _w = check_conclusion(g, theorem_id, k)
            if not ok_slow:
                bad.append(write_ecg(g))
    return examined, hyp, bad


def _random_mode(spec: TheoremSpec, n: int, k: Optional[int], samples: int,
                 seed: int, workers: int) -> tuple[int, int, list[ColoredGraph]]:
    chunk = max(1, (samples + max(workers, 1) * 8 - 1) // (max(workers, 1) * 8))
    bounds = [(lo, min(lo + chunk, samples)) for lo in range(0, samples, chunk)]
    args = [(spec.id, n, k, seed, lo, hi) for lo, hi in bounds]
    if workers <= 1 or len(args) <= 1:
        results = [_random_chunk(a) for a in args]
    else:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_random_chunk, args)
    examined = 0
    hyp = 0
    bad: list[ColoredGraph] = []
    for ex, hy, ce in results:
        examined += ex
        hyp += hy
        bad.extend(parse_ecg(s) for s in ce)
    return examined, hyp, bad


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def verify_theorem(theorem_id: str, n: int, k: Optional[int] = None,
                   mode: str = "exhaustive", samples: int = 100_000,
                   seed: int = 0, workers: int = 1,
                   allow_n7: bool = False) -> VerificationReport:
    """Check one registry entry exhaustively or on random samples.

    Exhaustive mode enumerates every edge-coloring of K_n up to color renaming
    (examined always equals Bell(n(n-1)/2)); n <= 6 unless allow_n7 overrides,
    n = 7 being the last feasible size.  Random mode draws
    hypothesis-conditioned samples, discarding sampler failures while counting
    every attempt, so the report's hypothesis count shows effective coverage.
    """
    spec = get_theorem(theorem_id)
    if spec.needs_k and k is None:
        raise GraphError(f"{theorem_id} needs the parameter k")
    if mode not in ("exhaustive", "random"):
        raise GraphError(f"unknown mode {mode!r}")
    if workers < 1:
        raise GraphError(f"need at least one worker, got {workers}")
    start = time.perf_counter()
    if mode == "exhaustive":
        limit = ENUM_MAX_N if allow_n7 else EXHAUSTIVE_DEFAULT_MAX_N
        if not 1 <= n <= limit:
            m = n * (n - 1) // 2 if n >= 1 else 0
            raise GraphError(
                f"exhaustive mode requires 1 <= n <= {limit} "
                f"(n={n} would mean Bell({m}) = {bell_number(m) if n >= 1 else 0} colorings; "
                f"pass allow_n7=True for n=7)")
        examined, hyp, bad = _exhaustive(spec, n, k, workers)
        expected = bell_number(n * (n - 1) // 2)
        if examined != expected:
            raise AssertionError(
                f"examined {examined} != Bell = {expected}; enumeration is broken")
    else:
        if samples < 1:
            raise GraphError(f"need at least one sample, got {samples}")
        examined, hyp, bad = _random_mode(spec, n, k, samples, seed, workers)
    wall_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        theorem=theorem_id, n=n, k=k, mode=mode, examined=examined,
        hypothesis_count=hyp, counterexamples=bad, seed=seed,
        workers=workers, wall_ms=wall_ms)
