"""Enumeration of (independent, clique) bipartitions.

Both "edgeless" and "complete" are hereditary, and a hypergraph that is both
has at most ``k - 1`` vertices, so there are at most ``n^(2(k-1))`` such
bipartitions. We enumerate them level by level over the vertex order: the
states kept after placing vertices ``0..i-1`` are exactly the sparse-dense
bipartitions of that prefix, and each is extended in both ways with an
incremental check involving only the new vertex.
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Iterator

from ..core import Bipartition, Hypergraph


class Orientation(enum.Enum):
    INDEPENDENT_FIRST = "independent-first"  # V1 independent, V2 clique
    CLIQUE_FIRST = "clique-first"  # V1 clique, V2 independent


def _fits_independent(v: int, side: list[int], incident) -> bool:
    members = set(side)
    return not any(all(u == v or u in members for u in e) for e in incident[v])


def _fits_clique(G: Hypergraph, v: int, side: list[int]) -> bool:
    edges = G.edges
    for rest in combinations(side, G.k - 1):
        if tuple(sorted(rest + (v,))) not in edges:
            return False
    return True


def sparse_dense_levels(G: Hypergraph) -> Iterator[list[tuple[list[int], list[int]]]]:
    """Yield the state list after each prefix ``0..i-1``, for ``i = 0..n``.

    A state is ``(independent_side, clique_side)`` as ascending vertex lists.
    """
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(G.n)]
    for e in G.edges:
        # only the largest vertex of an edge needs to test it
        incident[e[-1]].append(e)
    states: list[tuple[list[int], list[int]]] = [([], [])]
    yield states
    for v in range(G.n):
        nxt = []
        for indep, clique in states:
            if _fits_independent(v, indep, incident):
                nxt.append((indep + [v], clique))
            if _fits_clique(G, v, clique):
                nxt.append((indep, clique + [v]))
        states = nxt
        yield states


def enumerate_sparse_dense(G: Hypergraph, orientation: Orientation = Orientation.INDEPENDENT_FIRST) -> list[Bipartition]:
    """All bipartitions with one side edgeless and the other complete, sorted."""
    *_, final = sparse_dense_levels(G)
    out = []
    for indep, clique in final:
        v1 = indep if orientation is Orientation.INDEPENDENT_FIRST else clique
        out.append(Bipartition.from_v1(G.n, v1))
    out.sort(key=Bipartition.sort_key)
    return out
