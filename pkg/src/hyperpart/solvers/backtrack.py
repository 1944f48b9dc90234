"""Exact depth-first search with cardinality propagation.

Every constrained k-subset becomes a cardinality constraint "the number of
members in V1 lies in ``allowed``". Vertices are branched in index order,
V2 before V1, so solutions come out in lexicographic order of the ``V1``
characteristic string. After each assignment, a constraint whose feasible
counts collapse to its current minimum (or maximum) forces all its
unassigned members to V2 (or V1).

Exponential in the worst case; meant for NP-complete patterns at desk scale.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from ..core import Bipartition, Hypergraph, PiVector, _require_dims


class _Search:
    def __init__(self, G: Hypergraph, pi: PiVector):
        self.n = G.n
        k = G.k
        edge_mask = sum(1 << c for c in range(k + 1) if pi.allows(c, True))
        non_edge_mask = sum(1 << c for c in range(k + 1) if pi.allows(c, False))
        full = (1 << (k + 1)) - 1
        members: list[tuple[int, ...]] = []
        allowed: list[int] = []
        if edge_mask != full:
            for e in sorted(G.edges):
                members.append(e)
                allowed.append(edge_mask)
        if non_edge_mask != full:
            for X in combinations(range(G.n), k):
                if X not in G.edges:
                    members.append(X)
                    allowed.append(non_edge_mask)
        self.members = members
        self.allowed = allowed
        self.ones = [0] * len(members)
        self.free = [len(X) for X in members]
        self.watch: list[list[int]] = [[] for _ in range(G.n)]
        for ci, X in enumerate(members):
            for v in X:
                self.watch[v].append(ci)
        self.value: list[int] = [-1] * G.n
        self.trail: list[int] = []

    def _feasible(self, ci: int) -> int:
        lo = self.ones[ci]
        window = ((1 << (self.free[ci] + 1)) - 1) << lo
        return self.allowed[ci] & window

    def initial(self) -> bool:
        """Propagate constraints that are forced before any branching."""
        pending = []
        for ci in range(len(self.members)):
            if not self._forcing(ci, pending):
                return False
        return self._drain(pending)

    def _forcing(self, ci: int, pending: list[tuple[int, int]]) -> bool:
        feas = self._feasible(ci)
        if not feas:
            return False
        free = self.free[ci]
        if free == 0:
            return True
        lo = self.ones[ci]
        if feas == 1 << lo:
            forced = 0
        elif feas == 1 << (lo + free):
            forced = 1
        else:
            return True
        pending.extend((u, forced) for u in self.members[ci] if self.value[u] < 0)
        return True

    def assign(self, v: int, val: int) -> bool:
        return self._drain([(v, val)])

    def _drain(self, pending: list[tuple[int, int]]) -> bool:
        while pending:
            v, val = pending.pop()
            if self.value[v] >= 0:
                if self.value[v] != val:
                    return False
                continue
            self.value[v] = val
            self.trail.append(v)
            for ci in self.watch[v]:
                self.free[ci] -= 1
                self.ones[ci] += val
            for ci in self.watch[v]:
                if not self._forcing(ci, pending):
                    return False
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            v = self.trail.pop()
            val = self.value[v]
            self.value[v] = -1
            for ci in self.watch[v]:
                self.free[ci] += 1
                self.ones[ci] -= val

    def solutions(self, start: int = 0) -> Iterator[Bipartition]:
        v = start
        while v < self.n and self.value[v] >= 0:
            v += 1
        if v == self.n:
            yield Bipartition(tuple(bool(x) for x in self.value))
            return
        for val in (0, 1):
            mark = len(self.trail)
            if self.assign(v, val):
                yield from self.solutions(v + 1)
            self.undo(mark)


def backtrack_solutions(G: Hypergraph, pi: PiVector) -> Iterator[Bipartition]:
    """Lazily yield every pi-partition of ``G`` in lexicographic order."""
    _require_dims(G, pi)
    search = _Search(G, pi)
    if not search.initial():
        return
    yield from search.solutions()


def backtrack_first(G: Hypergraph, pi: PiVector) -> Bipartition | None:
    return next(backtrack_solutions(G, pi), None)
