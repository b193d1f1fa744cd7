#!/usr/bin/env python3
"""Compare the compiled enumeration kernel against the pure-Python fallback.

Runs the same workloads through both backends, checks the outputs agree
bit-for-bit, and prints a timing table.  The compiled kernel is what makes
the exhaustive K_6 sweep (criterion: 1.38e9 canonical colorings) practical;
the fallback exists so the package works without a C toolchain.

Usage: python benchmarks/compare_kernels.py [--k6-shards N]
"""

import argparse
import time

from rainbowtri._kernel import pure
from rainbowtri.bell import bell_number
from rainbowtri.constructions import gen_random
from rainbowtri.enumeration import shard_prefixes

try:
    from rainbowtri._kernel import _ckernel
except ImportError:
    _ckernel = None


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def row(name, py_time, c_time, agree):
    speed = f"{py_time / c_time:6.1f}x" if c_time else "   n/a"
    status = "ok" if agree else "MISMATCH"
    print(f"{name:<38} python {py_time:8.3f}s   compiled {c_time:8.3f}s "
          f"  speedup {speed}   {status}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k6-shards", type=int, default=3,
                        help="number of K_6 prefix shards to run in the "
                             "pure backend (each is a slice of Bell(15))")
    args = parser.parse_args()

    if _ckernel is None:
        print("compiled kernel not built; showing pure-Python timings only")

    print(f"Bell(10) = {bell_number(10)}, Bell(15) = {bell_number(15)}")
    print()

    # full K_5 sweep, min color-degree hypothesis, rainbow conclusion
    py, t_py = timed(pure.sweep, 5, 5, pure.MODE_EXISTS, 1, ())
    if _ckernel:
        c, t_c = timed(_ckernel.sweep, 5, 5, pure.MODE_EXISTS, 1, ())
        row("K_5 sweep (T8 hypothesis)", t_py, t_c, py == c)
    else:
        row("K_5 sweep (T8 hypothesis)", t_py, 0, True)

    # per-vertex counting mode
    py, t_py = timed(pure.sweep, 5, 6, pure.MODE_PERVERTEX, 1, ())
    if _ckernel:
        c, t_c = timed(_ckernel.sweep, 5, 6, pure.MODE_PERVERTEX, 1, ())
        row("K_5 sweep (per-vertex counts)", t_py, t_c, py == c)

    # rainbow-free collection mode
    py, t_py = timed(pure.sweep, 5, 4, pure.MODE_COLLECT_RFREE, 1, ())
    if _ckernel:
        c, t_c = timed(_ckernel.sweep, 5, 4, pure.MODE_COLLECT_RFREE, 1, ())
        row("K_5 sweep (collect rainbow-free)", t_py, t_c, py == c)

    # a few K_6 shards (full Bell(15) would take hours in pure Python); the
    # last prefixes carry the most colors and hence the largest subtrees
    shards = shard_prefixes(6, 6)[-args.k6_shards:]
    t_py_total = t_c_total = 0.0
    agree = True
    for p in shards:
        py, t_py = timed(pure.sweep, 6, 6, pure.MODE_EXISTS, 1, p)
        t_py_total += t_py
        if _ckernel:
            c, t_c = timed(_ckernel.sweep, 6, 6, pure.MODE_EXISTS, 1, p)
            t_c_total += t_c
            agree = agree and py == c
    row(f"K_6 sweep ({len(shards)} prefix shards)", t_py_total, t_c_total, agree)

    # flat triangle helpers on random graphs
    graphs = [gen_random(10, 6, s).color_matrix() for s in range(200)]
    py, t_py = timed(lambda: [pure.pervertex_rainbow(10, cm) for cm in graphs])
    if _ckernel:
        c, t_c = timed(lambda: [_ckernel.pervertex_rainbow(10, cm) for cm in graphs])
        row("per-vertex rainbow x200 (n=10)", t_py, t_c, py == c)
    py, t_py = timed(lambda: [pure.two_disjoint_rainbow(10, cm) for cm in graphs])
    if _ckernel:
        c, t_c = timed(lambda: [_ckernel.two_disjoint_rainbow(10, cm) for cm in graphs])
        row("two-disjoint check x200 (n=10)", t_py, t_c, py == c)

    if _ckernel:
        print()
        print("full K_6 sweep, compiled backend, single worker:")
        c, t_c = timed(_ckernel.sweep, 6, 6, pure.MODE_EXISTS, 1, ())
        print(f"  examined {c[0]} (= Bell(15)), hypothesis-satisfying {c[1]}, "
              f"counterexamples {len(c[2])}, {t_c:.1f}s")


if __name__ == "__main__":
    main()
