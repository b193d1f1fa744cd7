"""Kernel backend selection: compiled extension when available, else pure Python.

Set RAINBOWTRI_PURE=1 to force the pure-Python kernels (used by the
benchmark and by backend-parity tests).
"""

from __future__ import annotations

import os

from . import pure

MODE_EXISTS = pure.MODE_EXISTS
MODE_PERVERTEX = pure.MODE_PERVERTEX
MODE_COLLECT_RFREE = pure.MODE_COLLECT_RFREE
SWEEP_MAX_N = pure.SWEEP_MAX_N

if os.environ.get("RAINBOWTRI_PURE"):
    _impl = pure
    BACKEND = "python"
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]
        BACKEND = "c"
    except ImportError:
        _impl = pure
        BACKEND = "python"

# flat-matrix helpers guard: the compiled twins use fixed-size buffers
_FLAT_MAX_N = 16


def sweep(n, min_cd2, mode, k, prefix=()):
    return _impl.sweep(n, min_cd2, mode, k, tuple(prefix))


def structure_search(n, min_cd2, forbid_two_disjoint, cap, order):
    return _impl.structure_search(n, min_cd2, int(forbid_two_disjoint),
                                  cap, [tuple(p) for p in order])


def pervertex_rainbow(n, cmat):
    if BACKEND == "c" and n <= _FLAT_MAX_N:
        return _impl.pervertex_rainbow(n, cmat)
    return pure.pervertex_rainbow(n, cmat)


def exists_rainbow(n, cmat):
    if BACKEND == "c" and n <= _FLAT_MAX_N:
        return _impl.exists_rainbow(n, cmat)
    return pure.exists_rainbow(n, cmat)


def two_disjoint_rainbow(n, cmat):
    if BACKEND == "c" and n <= _FLAT_MAX_N:
        return _impl.two_disjoint_rainbow(n, cmat)
    return pure.two_disjoint_rainbow(n, cmat)
