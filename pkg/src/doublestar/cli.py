"""Command-line front end.

Exit codes: 0 success, 1 input or internal error, 2 no applicable theorem
(hypothesis not met), 3 certificate rejected by ``verify``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import generate as gen
from .decompose import verify_decomposition
from .errors import DoubleStarError, GraphError, HypothesisError
from .graph import Graph, bipartition, is_regular, is_triangle_free
from .io import (
    dump_certificate,
    format_edge_list,
    header_mismatches,
    read_certificate,
    read_edge_list,
    read_matchings,
    to_dot,
)
from .matching import find_perfect_matching
from .theorems import THEOREMS, Request, run_auto, run_theorem

EXIT_OK, EXIT_ERROR, EXIT_NO_THEOREM, EXIT_INVALID = 0, 1, 2, 3


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _summary(d, g: Graph) -> str:
    counts = ", ".join(f"S{a},{b} x {c}" for (a, b), c in sorted(d.shape_counts().items()))
    return f"{d.source}: {len(d)} stars on {g.m} edges ({counts or 'none'})"


def cmd_decompose(args: argparse.Namespace) -> int:
    try:
        g = read_edge_list(args.input)
        matchings = read_matchings(args.matching_file) if args.matching_file else None
    except (OSError, GraphError) as exc:
        _err(str(exc))
        return EXIT_ERROR
    req = Request(args.k1, args.k2, args.k1b, args.k2b, matchings)
    try:
        if args.theorem == "auto":
            d, skipped = run_auto(g, req)
            for name, why in skipped:
                print(f"auto: skipped {name}: {why}", file=sys.stderr)
        else:
            d = run_theorem(g, args.theorem, req)
    except HypothesisError as exc:
        _err(str(exc))
        return EXIT_NO_THEOREM
    except DoubleStarError as exc:
        _err(str(exc))
        return EXIT_ERROR
    report = verify_decomposition(g, d)
    if not report.valid:  # construction bug; never hand out a bad certificate
        for v in report.violations:
            _err(str(v))
        return EXIT_ERROR
    _write(args.out, dump_certificate(g, d))
    if args.dot:
        _write(args.dot, to_dot(g, d))
    print(_summary(d, g), file=sys.stdout if args.out not in (None, "-") else sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = read_edge_list(args.graph)
        header, d = read_certificate(args.certificate)
    except (OSError, GraphError) as exc:
        _err(str(exc))
        return EXIT_ERROR
    problems = header_mismatches(g, header)
    report = verify_decomposition(g, d)
    for p in problems:
        print(f"graph: {p}")
    for v in report.violations:
        print(str(v))
    if problems or not report.valid:
        print(f"invalid: {len(problems) + len(report.violations)} problems")
        return EXIT_INVALID
    print(f"valid: {len(d)} stars cover all {g.m} edges")
    return EXIT_OK


def _build_family(family: str, params: list[int], seed: int) -> Graph:
    def need(k: int) -> None:
        if len(params) != k:
            raise GraphError(f"family {family!r} takes {k} integer parameters, got {len(params)}")

    if family == "complete":
        need(1)
        return gen.complete_graph(params[0])
    if family == "complete-bipartite":
        need(2)
        return gen.complete_bipartite(*params)
    if family == "cycle":
        need(1)
        return gen.cycle(params[0])
    if family == "circulant":
        if len(params) < 2:
            raise GraphError("circulant takes n followed by at least one offset")
        return gen.circulant(params[0], params[1:])
    if family == "petersen":
        need(0)
        return gen.petersen()
    if family == "random-regular":
        need(2)
        return gen.random_regular(params[0], params[1], seed)
    if family == "random-regular-bipartite":
        need(2)
        return gen.random_regular_bipartite(params[0], params[1], seed)[0]
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(gen.FAMILIES)}")


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        g = _build_family(args.family, args.params, args.seed)
    except (DoubleStarError, ValueError) as exc:
        _err(str(exc))
        return EXIT_ERROR
    _write(args.out, format_edge_list(g))
    return EXIT_OK


def describe(g: Graph) -> list[str]:
    """Human-readable facts; the first line is the short summary."""
    r = is_regular(g)
    bip = bipartition(g) is not None
    tri_free = is_triangle_free(g)
    pm = find_perfect_matching(g) is not None
    head = [f"{r}-regular" if r is not None else "not regular"]
    # bipartite implies triangle-free, so at most one of the two is named
    head.append("bipartite" if bip else "triangle-free" if tri_free else "not bipartite")
    head.append("has perfect matching" if pm else "no perfect matching")
    degrees = g.degrees()
    return [
        ", ".join(head),
        f"vertices: {g.n}",
        f"edges: {g.m}",
        f"degrees: {min(degrees, default=0)}..{max(degrees, default=0)}",
        f"regular: {r if r is not None else 'no'}",
        f"bipartite: {'yes' if bip else 'no'}",
        f"triangle-free: {'yes' if tri_free else 'no'}",
        f"perfect matching: {'yes' if pm else 'no'} (exact)",
    ]


def cmd_info(args: argparse.Namespace) -> int:
    try:
        g = read_edge_list(args.graph)
    except (OSError, GraphError) as exc:
        _err(str(exc))
        return EXIT_ERROR
    print("\n".join(describe(g)))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with other input errors; 2 is reserved
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="doublestar", description="Double-star decompositions of regular graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a graph and write a certificate")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--theorem", choices=THEOREMS + ("auto",), default="auto")
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)
    p.add_argument("--k1b", type=int, help="first pendant size of the second shape")
    p.add_argument("--k2b", type=int, help="second pendant size of the second shape")
    p.add_argument("--seed", type=int, default=0, help="accepted for symmetry; constructions are deterministic")
    p.add_argument("--out", help="certificate path (default: stdout)")
    p.add_argument("--dot", help="also write a Graphviz file")
    p.add_argument("--matching-file", help="explicit matchings, one line of edge indices each")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a graph from a named family")
    p.add_argument("family", help=", ".join(gen.FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="edge-list path (default: stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("info", help="print basic structural facts")
    p.add_argument("graph")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        _err(str(exc))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
