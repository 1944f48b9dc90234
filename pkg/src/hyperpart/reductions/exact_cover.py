"""Exact cover with every element in three sets, versus the ``0*00`` pattern.

Universe = edges of a 3-uniform hypergraph, one set per vertex (its incident
edges). A subfamily covers every element exactly once iff the chosen
vertices meet every edge exactly once, i.e. form V1 of a ``0*00``-partition.
Sets are indexed, so isolated vertices contribute empty sets that may be
taken or left; this keeps the two counts equal.

File format: header ``p xc <|X|> <|S|>`` then one line per set with its
0-based element indices (an empty line is an empty set); ``#`` lines are
comments.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator

from ..core import Hypergraph
from ..errors import ApplicabilityError, ParseError, UsageError
from .record import ReductionRecord, Role, original
from .sat import SAT_PI


@dataclass(frozen=True)
class ExactCoverInstance:
    universe_size: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        for i, s in enumerate(sets):
            if any(not 0 <= x < self.universe_size for x in s):
                raise UsageError(f"set {i} has an element outside [0, {self.universe_size})")
        object.__setattr__(self, "sets", sets)

    def occurrences(self) -> list[int]:
        occ = [0] * self.universe_size
        for s in self.sets:
            for x in s:
                occ[x] += 1
        return occ

    @property
    def every_element_in_three(self) -> bool:
        return all(c == 3 for c in self.occurrences())


def to_exact_cover(G: Hypergraph) -> ReductionRecord:
    if G.k != 3:
        raise ApplicabilityError(f"exact-cover encoding needs a 3-uniform hypergraph, got k={G.k}")
    edges = G.sorted_edges()
    incident = [set() for _ in range(G.n)]
    for x, e in enumerate(edges):
        for v in e:
            incident[v].add(x)
    inst = ExactCoverInstance(len(edges), tuple(frozenset(s) for s in incident))
    roles = tuple(original(v) for v in range(G.n))
    return ReductionRecord("xc", G, SAT_PI, inst, None, roles)


def from_exact_cover(inst: ExactCoverInstance) -> ReductionRecord:
    if not inst.every_element_in_three:
        raise ApplicabilityError("every element must lie in exactly three sets")
    members = defaultdict(list)
    for i, s in enumerate(inst.sets):
        for x in s:
            members[x].append(i)
    edges = {tuple(sorted(members[x])) for x in range(inst.universe_size)}
    G = Hypergraph(len(inst.sets), 3, edges)
    roles = tuple(Role("set", (i,)) for i in range(len(inst.sets)))
    return ReductionRecord("from-xc", inst, None, G, SAT_PI, roles)


def exact_covers(inst: ExactCoverInstance) -> Iterator[tuple[int, ...]]:
    """Every exact cover as a sorted tuple of set indices (Algorithm X).

    Empty sets are independent of the search, so each cover of the
    non-empty sets is yielded once per subset of the empty ones.
    """
    empties = [i for i, s in enumerate(inst.sets) if not s]
    rows = {i: s for i, s in enumerate(inst.sets) if s}
    cols: dict[int, set[int]] = {x: set() for x in range(inst.universe_size)}
    for i, s in rows.items():
        for x in s:
            cols[x].add(i)

    def select(i):
        removed = []
        for x in rows[i]:
            for r in cols[x]:
                for y in rows[r]:
                    if y != x:
                        cols[y].discard(r)
            removed.append(cols.pop(x))
        return removed

    def deselect(i, removed):
        for x, col in zip(reversed(list(rows[i])), reversed(removed)):
            cols[x] = col
            for r in col:
                for y in rows[r]:
                    if y != x:
                        cols[y].add(r)

    def search(partial):
        if not cols:
            yield tuple(sorted(partial))
            return
        x = min(cols, key=lambda c: len(cols[c]))
        for i in sorted(cols[x]):
            partial.append(i)
            removed = select(i)
            yield from search(partial)
            deselect(i, removed)
            partial.pop()

    for base in search([]):
        for size in range(len(empties) + 1):
            for extra in combinations(empties, size):
                yield tuple(sorted(base + extra))


def count_exact_covers(inst: ExactCoverInstance) -> int:
    return sum(1 for _ in exact_covers(inst))


def parse_exact_cover(text: str) -> ExactCoverInstance:
    lines = [(i, raw.strip()) for i, raw in enumerate(text.splitlines(), start=1) if not raw.strip().startswith("#")]
    while lines and not lines[0][1]:
        lines.pop(0)
    if not lines:
        raise ParseError("missing 'p xc <|X|> <|S|>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[:2] != ["p", "xc"]:
        raise ParseError(f"malformed header {header!r}", lineno)
    try:
        size, count = int(parts[2]), int(parts[3])
    except ValueError:
        raise ParseError(f"malformed header {header!r}", lineno) from None
    body = lines[1:]
    if any(line for _, line in body[count:]):
        raise ParseError(f"more than {count} sets given", body[count][0])
    body += [(None, "")] * (count - len(body))
    sets = []
    for lineno, line in body[:count]:
        try:
            elems = [int(t) for t in line.split()]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if any(not 0 <= x < size for x in elems):
            raise ParseError(f"element out of range [0, {size})", lineno)
        if len(set(elems)) != len(elems):
            raise ParseError("set repeats an element", lineno)
        sets.append(frozenset(elems))
    return ExactCoverInstance(size, tuple(sets))


def serialize_exact_cover(inst: ExactCoverInstance) -> str:
    lines = [f"p xc {inst.universe_size} {len(inst.sets)}"]
    lines.extend(" ".join(map(str, sorted(s))) for s in inst.sets)
    return "\n".join(lines) + "\n"


def read_exact_cover(path: str | Path) -> ExactCoverInstance:
    return parse_exact_cover(Path(path).read_text())
