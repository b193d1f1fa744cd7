"""Bell numbers and restricted-growth-string completion counts."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def bell_number(k: int) -> int:
    """Number of set partitions of k elements, via the Bell triangle."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def completion_counts(m: int) -> list[list[int]]:
    """Table comp[r][b] = number of RGS suffixes of length r given b used blocks.

    comp[r][b] = b * comp[r-1][b] + comp[r-1][b+1] with comp[0][b] = 1.
    The table is built wide enough (b up to 2m+1) that every entry with
    r + b <= 2m + 1 is exact; in particular comp[m][0] = Bell(m).
    """
    width = 2 * m + 2
    comp = [[1] * (width + 1) for _ in range(m + 1)]
    for r in range(1, m + 1):
        for b in range(width - 1, -1, -1):
            comp[r][b] = b * comp[r - 1][b] + comp[r - 1][b + 1]
    return comp
