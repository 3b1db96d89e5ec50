"""Edge-list files, JSON certificates and DOT export.

Edge-list format: a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u < v < n``; anything after ``#`` is a comment and blank lines are
ignored.  Edge index ``i`` is the ``i``-th edge line.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .decompose.types import Decomposition, DoubleStar, normalize_shape
from .errors import GraphFormatError
from .graph import Graph, build_graph

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
)


# -- edge lists -----------------------------------------------------------------------


def _parse_ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count or not all(p.isdigit() for p in parts):
        raise GraphFormatError(f"line {lineno}: expected {count} non-negative integers, got {line!r}")
    return [int(p) for p in parts]


def parse_edge_list(text: str) -> Graph:
    header: list[int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            header = _parse_ints(line, lineno, 2)
            continue
        u, v = _parse_ints(line, lineno, 2)
        if u >= v:
            raise GraphFormatError(f"line {lineno}: edge must be written 'u v' with u < v")
        if v >= header[0]:
            raise GraphFormatError(f"line {lineno}: vertex {v} outside [0, {header[0]})")
        pairs.append((u, v))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    n, m = header
    if len(pairs) != m:
        raise GraphFormatError(f"header announces {m} edges, file has {len(pairs)}")
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    """Canonical text: edges in index order, LF line endings, no comments."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in (g.endpoints(e) for e in sorted(g.edges)))
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path}: not ASCII") from exc
    return parse_edge_list(text)


def write_edge_list(g: Graph, path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(format_edge_list(g).encode("ascii")).hexdigest()


# -- certificates -----------------------------------------------------------------------


def _index_map(g: Graph) -> dict[int, int]:
    """Internal edge index -> position in the edge-list file."""
    return {e: i for i, e in enumerate(sorted(g.edges))}


def certificate_dict(g: Graph, d: Decomposition) -> dict[str, Any]:
    pos = _index_map(g)
    return {
        "graph": {"n": g.n, "m": g.m, "hash": graph_hash(g)},
        "theorem": d.source,
        "shapes": [list(s) for s in sorted(d.allowed_shapes)],
        "stars": [
            {
                "u1": s.center1,
                "u2": s.center2,
                "central": pos[s.central_edge],
                "X": [[p, pos[e]] for p, e in s.x],
                "Y": [[p, pos[e]] for p, e in s.y],
            }
            for s in d.stars
        ],
    }


def dump_certificate(g: Graph, d: Decomposition) -> str:
    return json.dumps(certificate_dict(g, d), indent=1) + "\n"


def write_certificate(g: Graph, d: Decomposition, path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dump_certificate(g, d))


def _pendants(raw: Any) -> tuple:
    # Malformed entries are kept as they are so the verifier can report them.
    if not isinstance(raw, list):
        raise GraphFormatError("pendant list must be a JSON array")
    return tuple(tuple(p) if isinstance(p, list) else p for p in raw)


def certificate_from_dict(data: dict[str, Any]) -> tuple[dict[str, Any], Decomposition]:
    """Header and decomposition; edge indices are file positions."""
    try:
        header = data["graph"]
        shapes = frozenset(normalize_shape(s) for s in data["shapes"])
        stars = tuple(
            DoubleStar(s["u1"], s["u2"], s["central"], _pendants(s["X"]), _pendants(s["Y"]))
            for s in data["stars"]
        )
        theorem = str(data.get("theorem", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"malformed certificate: {exc!r}") from exc
    return header, Decomposition(stars, shapes, theorem)


def read_certificate(path: str | Path) -> tuple[dict[str, Any], Decomposition]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise GraphFormatError(f"{path}: certificate must be a JSON object")
    return certificate_from_dict(data)


def header_mismatches(g: Graph, header: dict[str, Any]) -> list[str]:
    problems = []
    if header.get("n") != g.n:
        problems.append(f"certificate is for n={header.get('n')}, graph has n={g.n}")
    if header.get("m") != g.m:
        problems.append(f"certificate is for m={header.get('m')}, graph has m={g.m}")
    if header.get("hash") != graph_hash(g):
        problems.append("edge-list hash does not match the certificate")
    return problems


# -- matchings file ----------------------------------------------------------------------


def read_matchings(path: str | Path) -> list[frozenset[int]]:
    """One matching per non-empty line, as whitespace-separated edge indices."""
    out = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="ascii").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if not all(p.isdigit() for p in parts):
            raise GraphFormatError(f"{path}:{lineno}: expected edge indices")
        out.append(frozenset(int(p) for p in parts))
    return out


# -- DOT ---------------------------------------------------------------------------------


def to_dot(g: Graph, d: Decomposition | None = None, name: str = "G") -> str:
    """Graphviz source; with ``d`` each star gets a colour and central edges are bold."""
    style: dict[int, str] = {}
    if d is not None:
        for i, star in enumerate(d.stars):
            colour = PALETTE[i % len(PALETTE)]
            for e in star.edges():
                style[e] = f'color="{colour}", label="{i}"'
            style[star.central_edge] = f'color="{colour}", label="{i}", style=bold, penwidth=3'
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines.extend(f"  {v};" for v in range(g.n))
    for e in sorted(g.edges):
        u, v = g.endpoints(e)
        attr = style.get(e)
        lines.append(f"  {u} -- {v}" + (f" [{attr}];" if attr else ";"))
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(g: Graph, d: Decomposition | None, path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(to_dot(g, d))

