"""The .ecg text format: `ecg 1` header, then `n m`, then one `u v color` line per edge."""

from __future__ import annotations

from .graph import ColoredGraph, GraphError, validate

MAGIC = "ecg"
VERSION = 1


class EcgError(GraphError):
    """Malformed .ecg document."""


def parse_ecg(text: str) -> ColoredGraph:
    """Parse and validate an .ecg document; colors are densified on parse."""
    graph, _ = parse_ecg_with_color_map(text)
    return graph


def parse_ecg_with_color_map(text: str) -> tuple[ColoredGraph, dict[int, int]]:
    """Like parse_ecg, also reporting the original-to-dense color id map."""
    lines = text.splitlines()
    if not lines:
        raise EcgError("empty document")
    header = lines[0].split()
    if len(header) != 2 or header[0] != MAGIC:
        raise EcgError(f"line 1: expected header '{MAGIC} {VERSION}', got {lines[0]!r}")
    if header[1] != str(VERSION):
        raise EcgError(f"line 1: unsupported version {header[1]!r}")
    if len(lines) < 2:
        raise EcgError("line 2: missing 'n m' counts")
    counts = lines[1].split()
    if len(counts) != 2:
        raise EcgError(f"line 2: expected 'n m', got {lines[1]!r}")
    try:
        n, m = int(counts[0]), int(counts[1])
    except ValueError:
        raise EcgError(f"line 2: non-integer counts in {lines[1]!r}") from None
    body = lines[2:]
    if any(not ln.strip() for ln in body):
        first_blank = next(i for i, ln in enumerate(body) if not ln.strip())
        raise EcgError(f"line {first_blank + 3}: blank line inside edge list")
    if len(body) != m:
        raise EcgError(f"edge count mismatch: header says {m}, found {len(body)} lines")
    edges = []
    seen: set[tuple[int, int]] = set()
    for i, ln in enumerate(body):
        lineno = i + 3
        fields = ln.split()
        if len(fields) != 3:
            raise EcgError(f"line {lineno}: expected 'u v color', got {ln!r}")
        try:
            u, v, c = (int(x) for x in fields)
        except ValueError:
            raise EcgError(f"line {lineno}: non-integer field in {ln!r}") from None
        if u == v:
            raise EcgError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise EcgError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if c < 0:
            raise EcgError(f"line {lineno}: negative color {c}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EcgError(f"line {lineno}: duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
        edges.append((u, v, c))
    graph = validate(edges, n)
    color_map: dict[int, int] = {}
    raw = {(min(u, v), max(u, v)): c for u, v, c in edges}
    for u, v, dense in graph.edges():
        color_map.setdefault(raw[(u, v)], dense)
    return graph, color_map


def write_ecg(g: ColoredGraph) -> str:
    """Serialize a validated graph; byte-deterministic, lexicographic edges."""
    lines = [f"{MAGIC} {VERSION}", f"{g.n} {g.m}"]
    for u, v, c in g.edges():
        lines.append(f"{u} {v} {c}")
    return "\n".join(lines) + "\n"
