"""Pattern vectors, uniform hypergraphs, bipartitions and the partition checker."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import UsageError

ZERO, ONE, STAR = "0", "1", "*"
_SYMBOLS = frozenset((ZERO, ONE, STAR))


@dataclass(frozen=True)
class PiVector:
    """A pattern ``(pi_0, ..., pi_k)`` over ``{0, 1, *}``.

    Entry ``pi_c`` constrains every k-set meeting side one in exactly ``c``
    vertices: ``1`` forces it to be an edge, ``0`` forbids it, ``*`` is free.
    """

    entries: str

    def __post_init__(self):
        entries = self.entries
        if not isinstance(entries, str):
            entries = "".join(entries)
            object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise UsageError(f"pattern {entries!r} must have length >= 2")
        bad = set(entries) - _SYMBOLS
        if bad:
            raise UsageError(f"pattern {entries!r} has symbols outside '01*': {sorted(bad)}")

    @classmethod
    def parse(cls, text: str) -> PiVector:
        return cls(text.strip())

    @property
    def k(self) -> int:
        return len(self.entries) - 1

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __iter__(self) -> Iterator[str]:
        return iter(self.entries)

    def __str__(self) -> str:
        return self.entries

    @property
    def is_one_free(self) -> bool:
        return ONE not in self.entries

    @property
    def is_all_zero(self) -> bool:
        return set(self.entries) == {ZERO}

    @property
    def has_both_zero_and_one(self) -> bool:
        return ZERO in self.entries and ONE in self.entries

    @property
    def is_alternating(self) -> bool:
        return all(c == (ZERO if i % 2 == 0 else STAR) for i, c in enumerate(self.entries))

    @property
    def has_consecutive_stars(self) -> bool:
        return STAR + STAR in self.entries

    @property
    def is_trivial(self) -> bool:
        """True when putting every vertex on one side always works."""
        return self.entries[0] == STAR or self.entries[-1] == STAR

    def allows(self, count: int, is_edge: bool) -> bool:
        c = self.entries[count]
        if c == STAR:
            return True
        return (c == ONE) == is_edge


def complement_pi(pi: PiVector) -> PiVector:
    return PiVector(pi.entries.translate(str.maketrans("01", "10")))


def reverse_pi(pi: PiVector) -> PiVector:
    return PiVector(pi.entries[::-1])


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices ``0..n-1``.

    Edges are stored as ascending tuples in a frozenset; construction
    canonicalizes and validates whatever iterable of vertex collections it
    is given. Duplicates after canonicalization are rejected.
    """

    n: int
    k: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise UsageError(f"vertex count must be non-negative, got {self.n}")
        if self.k < 1:
            raise UsageError(f"uniformity must be >= 1, got {self.k}")
        canon = set()
        for raw in self.edges:
            edge = tuple(sorted(raw))
            if len(edge) != self.k or len(set(edge)) != self.k:
                raise UsageError(f"edge {tuple(raw)} does not have {self.k} distinct vertices")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise UsageError(f"edge {edge} has a vertex outside [0, {self.n})")
            if edge in canon:
                raise UsageError(f"duplicate edge {edge}")
            canon.add(edge)
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Iterable[int]], dedupe: bool = False) -> Hypergraph:
        edges = [tuple(sorted(e)) for e in edges]
        if dedupe:
            edges = set(edges)
        return cls(n, k, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(self.edges)

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return tuple(sorted(vertices)) in self.edges

    def __contains__(self, vertices) -> bool:
        return self.has_edge(vertices)


@dataclass(frozen=True)
class Bipartition:
    """Assignment of each vertex to side one (``V1``) or side two (``V2``).

    ``in_v1[v]`` is True when vertex ``v`` lies in side one. Text form is a
    string over ``12``; the sort key is the characteristic string of ``V1``
    over ``01``, so the all-``V2`` partition sorts first.
    """

    in_v1: tuple[bool, ...]

    @classmethod
    def from_v1(cls, n: int, v1: Iterable[int]) -> Bipartition:
        side = [False] * n
        for v in v1:
            if not 0 <= v < n:
                raise UsageError(f"vertex {v} outside [0, {n})")
            side[v] = True
        return cls(tuple(side))

    @classmethod
    def from_string(cls, text: str) -> Bipartition:
        text = text.strip()
        if set(text) - {"1", "2"}:
            raise UsageError(f"partition string {text!r} must use only '1' and '2'")
        return cls(tuple(ch == "1" for ch in text))

    @classmethod
    def all_v2(cls, n: int) -> Bipartition:
        return cls((False,) * n)

    @classmethod
    def all_v1(cls, n: int) -> Bipartition:
        return cls((True,) * n)

    @property
    def n(self) -> int:
        return len(self.in_v1)

    @property
    def v1(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.in_v1) if s)

    @property
    def v2(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.in_v1) if not s)

    def swapped(self) -> Bipartition:
        return Bipartition(tuple(not s for s in self.in_v1))

    def restrict(self, vertices: Sequence[int]) -> Bipartition:
        return Bipartition(tuple(self.in_v1[v] for v in vertices))

    def sort_key(self) -> str:
        return "".join("1" if s else "0" for s in self.in_v1)

    def __str__(self) -> str:
        return "".join("1" if s else "2" for s in self.in_v1)


class ViolationKind(enum.Enum):
    EDGE_FORBIDDEN = "EdgeForbidden"
    NON_EDGE_REQUIRED = "NonEdgeRequired"


@dataclass(frozen=True)
class Violation:
    witness: tuple[int, ...]
    count_in_v1: int
    kind: ViolationKind

    def __str__(self) -> str:
        return " ".join(map(str, self.witness)) + f" count={self.count_in_v1}"


def _require_dims(G: Hypergraph, pi: PiVector, P: Bipartition | None = None) -> None:
    if pi.k != G.k:
        raise UsageError(f"pattern {pi} has k={pi.k} but the hypergraph is {G.k}-uniform")
    if P is not None and P.n != G.n:
        raise UsageError(f"partition has {P.n} vertices but the hypergraph has {G.n}")


def check_partition(G: Hypergraph, pi: PiVector, P: Bipartition) -> Violation | None:
    """Return ``None`` if ``P`` is a pi-partition of ``G``, else the least violation.

    The witness is the lexicographically smallest offending k-subset. When
    the pattern has no ``1`` only edges can violate, so only edges are
    scanned; otherwise every k-subset is.
    """
    _require_dims(G, pi, P)
    side = P.in_v1
    if pi.is_one_free:
        candidates: Iterable[tuple[int, ...]] = sorted(G.edges)
    else:
        candidates = combinations(range(G.n), G.k)
    edges = G.edges
    for X in candidates:
        count = sum(side[v] for v in X)
        c = pi[count]
        if c == STAR:
            continue
        is_edge = X in edges
        if c == ZERO and is_edge:
            return Violation(X, count, ViolationKind.EDGE_FORBIDDEN)
        if c == ONE and not is_edge:
            return Violation(X, count, ViolationKind.NON_EDGE_REQUIRED)
    return None


def is_pi_partition(G: Hypergraph, pi: PiVector, P: Bipartition) -> bool:
    return check_partition(G, pi, P) is None


def complement_hypergraph(G: Hypergraph) -> Hypergraph:
    edges = [X for X in combinations(range(G.n), G.k) if X not in G.edges]
    return Hypergraph(G.n, G.k, edges)


def _vertex_set(G: Hypergraph, W: Iterable[int]) -> list[int]:
    W = sorted(set(W))
    if W and (W[0] < 0 or W[-1] >= G.n):
        raise UsageError(f"vertex set {W} is not contained in [0, {G.n})")
    return W


def induced(G: Hypergraph, W: Iterable[int]) -> Hypergraph:
    """Subgraph induced by ``W``, relabeled so new vertex ``i`` is ``sorted(W)[i]``."""
    W = _vertex_set(G, W)
    index = {v: i for i, v in enumerate(W)}
    edges = [tuple(index[v] for v in e) for e in G.edges if all(v in index for v in e)]
    return Hypergraph(len(W), G.k, edges)


def link(G: Hypergraph, U: Iterable[int]) -> Hypergraph:
    """The ``(k - |U|)``-uniform link of ``U``.

    Vertex set is ``V \\ U`` relabeled in increasing order; ``Y`` is an edge
    exactly when ``Y | U`` is an edge of ``G``.
    """
    U = _vertex_set(G, U)
    if len(U) >= G.k:
        raise UsageError(f"link needs |U| < k, got |U|={len(U)} with k={G.k}")
    Uset = set(U)
    rest = [v for v in range(G.n) if v not in Uset]
    index = {v: i for i, v in enumerate(rest)}
    edges = [tuple(index[v] for v in e if v not in Uset) for e in G.edges if Uset.issubset(e)]
    return Hypergraph(len(rest), G.k - len(U), edges)


def is_independent(G: Hypergraph, W: Iterable[int]) -> bool:
    W = set(_vertex_set(G, W))
    return not any(W.issuperset(e) for e in G.edges)


def is_clique(G: Hypergraph, W: Iterable[int]) -> bool:
    W = _vertex_set(G, W)
    return all(X in G.edges for X in combinations(W, G.k))
