"""Command-line interface binding the library into a usable tool.

Exit codes: 0 success; `verify` exits 0 iff zero counterexamples; `search`
exits 0 iff an instance was found; usage/file/argument errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .constructions import (gen_construction2, gen_extremal_thm10,
                            gen_pc_bipartite, gen_rainbow_complete, gen_random,
                            recognize_thm10)
from .ecg import parse_ecg, write_ecg
from .graph import ColoredGraph, DegreeProfile, GraphError
from .packing import max_disjoint_packing
from .search import SearchConfig, search_counterexample
from .triangles import count_rainbow_per_vertex, enumerate_triangles, rainbow_triangles_at
from .theorems import THEOREMS
from .verify import verify_theorem


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> ColoredGraph:
    try:
        with open(path) as fh:
            return parse_ecg(fh.read())
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from None


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "construction2":
        if args.p is None:
            raise GraphError("gen construction2 needs --p")
        g = gen_construction2(args.p)
    elif args.kind == "extremal10":
        if args.n is None:
            raise GraphError("gen extremal10 needs --n")
        g = gen_extremal_thm10(args.n)
    elif args.kind == "bipartite":
        if args.n is None:
            raise GraphError("gen bipartite needs --n")
        g = gen_pc_bipartite(args.n)
    elif args.kind == "rainbow":
        if args.n is None:
            raise GraphError("gen rainbow needs --n")
        g = gen_rainbow_complete(args.n)
    else:  # random
        if args.n is None or args.colors is None:
            raise GraphError("gen random needs --n and --colors")
        completeness = "complete" if args.edge_prob is None else args.edge_prob
        g = gen_random(args.n, args.colors, args.seed, completeness)
    _emit(write_ecg(g), args.output)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _load(args.file)
    profile = DegreeProfile.from_graph(g)
    rcounts = count_rainbow_per_vertex(g)
    total = sum(rcounts) // 3
    if args.json:
        doc = {
            "n": g.n,
            "m": g.m,
            "complete": g.is_complete,
            "colors": g.color_count,
            "min_color_degree": profile.min_color_degree,
            "max_mono_degree": profile.max_mono_degree,
            "per_vertex": [
                {"v": v,
                 "degree": profile.degree[v],
                 "color_degree": profile.color_degree[v],
                 "mono_degree": profile.mono_degree[v],
                 "rainbow_triangles": rcounts[v]}
                for v in range(g.n)
            ],
            "rainbow_triangle_total": total,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"n={g.n} m={g.m} complete={g.is_complete} colors={g.color_count}")
        print(f"min_color_degree={profile.min_color_degree} "
              f"max_mono_degree={profile.max_mono_degree} "
              f"rainbow_triangles={total}")
        for v in range(g.n):
            print(f"  v{v}: degree={profile.degree[v]} "
                  f"color_degree={profile.color_degree[v]} "
                  f"mono_degree={profile.mono_degree[v]} "
                  f"rainbow_triangles={rcounts[v]}")
    return 0


def _cmd_triangles(args: argparse.Namespace) -> int:
    g = _load(args.file)
    if args.at is not None:
        tris = rainbow_triangles_at(g, args.at) if args.rainbow_only else [
            t for t in enumerate_triangles(g) if args.at in t.vertices]
    else:
        tris = enumerate_triangles(g, rainbow_only=args.rainbow_only)
    for t in tris:
        u, v, w = t.vertices
        a, b, c = t.colors
        tag = " rainbow" if t.rainbow else ""
        print(f"{u} {v} {w} : {a} {b} {c}{tag}")
    print(f"total {len(tris)}")
    return 0


def _cmd_pack(args: argparse.Namespace) -> int:
    g = _load(args.file)
    packing = max_disjoint_packing(g, mode=args.mode)
    for t in packing.triangles:
        u, v, w = t.vertices
        a, b, c = t.colors
        print(f"{u} {v} {w} : {a} {b} {c}")
    print(f"packing size {packing.size} ({args.mode})")
    return 0


def _cmd_recognize(args: argparse.Namespace) -> int:
    if args.structure != "thm10":
        raise GraphError(f"unknown structure {args.structure!r}")
    g = _load(args.file)
    cert = recognize_thm10(g)
    if cert is None:
        print("no certificate")
    else:
        pairs = " ".join(f"{{{a},{b}}}" for a, b in cert.pairs)
        colors = " ".join(str(c) for c in cert.part_colors)
        print(f"hub {cert.hub}")
        print(f"pairs {pairs}")
        print(f"part_colors {colors}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem not in THEOREMS:
        raise GraphError(f"unknown theorem id {args.theorem!r}; "
                         f"known: {', '.join(sorted(THEOREMS))}")
    report = verify_theorem(args.theorem, args.n, k=args.k, mode=args.mode,
                            samples=args.samples, seed=args.seed,
                            workers=args.workers, allow_n7=args.allow_n7)
    if args.json:
        print(report.to_json())
    else:
        print(f"theorem {report.theorem} n={report.n}"
              + (f" k={report.k}" if report.k is not None else "")
              + f" mode={report.mode}")
        print(f"examined {report.examined}, hypothesis-satisfying "
              f"{report.hypothesis_count}, counterexamples "
              f"{len(report.counterexamples)}")
        print(f"status {report.status} ({report.wall_ms:.0f} ms, "
              f"{report.workers} worker(s))")
    if report.counterexamples:
        path = args.counterexample_out or f"counterexample-{report.theorem}-n{report.n}.ecg"
        with open(path, "w") as fh:
            fh.write(write_ecg(report.counterexamples[0]))
        print(f"counterexample written to {path}")
        return 1
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    forbid = {"rainbow-triangle": "rainbow-triangle",
              "two-disjoint-rainbow": "two-disjoint-rainbow"}[args.forbid]
    cfg = SearchConfig(
        n=args.n,
        scope="general" if args.general else "complete",
        min_color_degree=args.min_color_degree,
        forbid=forbid,
        move_budget=args.budget,
        restarts=args.restarts,
        seed=args.seed,
    )
    graph, log = search_counterexample(cfg)
    if graph is None:
        print(f"not found: budget exhausted after {log.moves_used} moves "
              f"over {log.restarts_run} restart(s); best objective {log.best_objective}")
        return 1
    print(f"found after {log.moves_used} moves "
          f"(restart {log.found_restart}, move {log.found_move})")
    _emit(write_ecg(graph), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowtri",
        description="Analyze rainbow triangles in edge-colored graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph in .ecg format")
    p_gen.add_argument("kind", choices=["construction2", "extremal10",
                                        "bipartite", "rainbow", "random"])
    p_gen.add_argument("--p", type=int, help="parameter for construction2")
    p_gen.add_argument("--n", type=int, help="vertex count")
    p_gen.add_argument("--colors", type=int, help="color count for random")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--edge-prob", type=float, default=None,
                       help="edge probability (random graphs; default complete)")
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(func=_cmd_gen)

    p_an = sub.add_parser("analyze", help="degree and rainbow statistics")
    p_an.add_argument("file")
    p_an.add_argument("--json", action="store_true")
    p_an.set_defaults(func=_cmd_analyze)

    p_tri = sub.add_parser("triangles", help="list triangles")
    p_tri.add_argument("file")
    p_tri.add_argument("--rainbow-only", action="store_true")
    p_tri.add_argument("--at", type=int, default=None,
                       help="restrict to triangles through this vertex")
    p_tri.set_defaults(func=_cmd_triangles)

    p_pack = sub.add_parser("pack", help="vertex-disjoint rainbow triangle packing")
    p_pack.add_argument("file")
    p_pack.add_argument("--mode", choices=["exact", "greedy"], default="exact")
    p_pack.set_defaults(func=_cmd_pack)

    p_rec = sub.add_parser("recognize", help="recognize an extremal structure")
    p_rec.add_argument("structure", choices=["thm10"])
    p_rec.add_argument("file")
    p_rec.set_defaults(func=_cmd_recognize)

    p_ver = sub.add_parser("verify", help="verify a registered theorem")
    p_ver.add_argument("--theorem", required=True)
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--k", type=int, default=None)
    p_ver.add_argument("--mode", choices=["exhaustive", "random"],
                       default="exhaustive")
    p_ver.add_argument("--samples", type=int, default=100_000)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--workers", type=int, default=1)
    p_ver.add_argument("--allow-n7", action="store_true",
                       help="unlock the n=7 exhaustive sweep (very slow)")
    p_ver.add_argument("--json", action="store_true")
    p_ver.add_argument("--counterexample-out", default=None)
    p_ver.set_defaults(func=_cmd_verify)

    p_sea = sub.add_parser("search", help="anneal toward a counterexample coloring")
    p_sea.add_argument("--n", type=int, required=True)
    p_sea.add_argument("--general", action="store_true",
                       help="search general graphs (default: complete)")
    p_sea.add_argument("--min-color-degree", type=int, required=True)
    p_sea.add_argument("--forbid", required=True,
                       choices=["rainbow-triangle", "two-disjoint-rainbow"])
    p_sea.add_argument("--budget", type=int, default=100_000_000)
    p_sea.add_argument("--restarts", type=int, default=32)
    p_sea.add_argument("--seed", type=int, default=0)
    p_sea.add_argument("-o", "--output", default=None)
    p_sea.set_defaults(func=_cmd_search)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
