"""Text formats for hypergraphs.

A hypergraph file has optional ``#`` comment lines, a header
``p hg <k> <n> <m>`` and then ``m`` lines of ``k`` ascending 0-based vertex
indices::

    # the forcing gadget
    p hg 3 4 3
    0 1 3
    0 2 3
    1 2 3
"""

from __future__ import annotations

from pathlib import Path

from .core import Hypergraph
from .errors import ParseError


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'p hg <k> <n> <m>' header") from None
    parts = header.split()
    if len(parts) != 5 or parts[:2] != ["p", "hg"]:
        raise ParseError(f"malformed header {header!r}", lineno)
    k, n, m = _ints(parts[2:], lineno)
    if k < 1 or n < 0 or m < 0:
        raise ParseError(f"header values out of range: k={k} n={n} m={m}", lineno)

    edges: set[tuple[int, ...]] = set()
    for lineno, line in lines:
        vs = _ints(line.split(), lineno)
        if len(vs) != k:
            raise ParseError(f"edge has {len(vs)} vertices, expected {k}", lineno)
        if any(not 0 <= v < n for v in vs):
            raise ParseError(f"vertex out of range [0, {n}) in edge {vs}", lineno)
        if len(set(vs)) != k:
            raise ParseError(f"edge {vs} repeats a vertex", lineno)
        if vs != sorted(vs):
            raise ParseError(f"edge {vs} is not in ascending order", lineno)
        edge = tuple(vs)
        if edge in edges:
            raise ParseError(f"duplicate edge {vs}", lineno)
        edges.add(edge)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given")
    return Hypergraph(n, k, edges)


def serialize_hypergraph(G: Hypergraph) -> str:
    lines = [f"p hg {G.k} {G.n} {G.m}"]
    lines.extend(" ".join(map(str, e)) for e in G.sorted_edges())
    return "\n".join(lines) + "\n"


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def write_hypergraph(G: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(serialize_hypergraph(G))
