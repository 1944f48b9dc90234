"""Polynomial enumeration for patterns containing both 0 and 1.

Pick ``a < b`` with ``pi_a = 0`` and ``pi_b = 1``. In any pi-partition with
``|V1| >= a`` and ``|V2| >= k - b``, fix ``A`` inside ``V1`` with ``|A| = a``
and ``B`` inside ``V2`` with ``|B| = k - b``. In the ``(b - a)``-uniform link
of ``A | B``, the rest of ``V1`` is a clique (those k-sets meet V1 in ``b``)
and the rest of ``V2`` is independent (they meet V1 in ``a``). So guessing
``A`` and ``B`` and enumerating clique/independent splits of the link finds
every such partition; the few partitions with a smaller side are swept
directly. When the only usable pairs have the 1 before the 0, the pattern is
reversed and the answers swapped back.
"""

from __future__ import annotations

from itertools import combinations

from ..core import (
    ONE,
    ZERO,
    Bipartition,
    Hypergraph,
    PiVector,
    _require_dims,
    check_partition,
    link,
    reverse_pi,
)
from ..errors import ApplicabilityError
from .sparse_dense import Orientation, enumerate_sparse_dense


def _choose_pair(pi: PiVector) -> tuple[int, int, bool]:
    """Return ``(a, b, reversed)`` minimizing the guessed set size ``a + k - b``."""
    k = pi.k
    best = None
    for a in (i for i, c in enumerate(pi) if c == ZERO):
        for b in (i for i, c in enumerate(pi) if c == ONE):
            if a < b:
                cand = (a + k - b, a, b, False)
            else:
                cand = ((k - a) + b, k - a, k - b, True)
            if best is None or cand < best:
                best = cand
    _, a, b, rev = best
    return a, b, rev


def _small_sides(n: int, limit: int):
    for size in range(min(limit, n + 1)):
        yield from combinations(range(n), size)


def _solve_oriented(G: Hypergraph, pi: PiVector, a: int, b: int) -> list[Bipartition]:
    n, k = G.n, G.k
    seen: set[tuple[bool, ...]] = set()
    found: list[Bipartition] = []

    def consider(P: Bipartition) -> None:
        if P.in_v1 in seen:
            return
        seen.add(P.in_v1)
        if check_partition(G, pi, P) is None:
            found.append(P)

    for small_v1 in _small_sides(n, a):
        consider(Bipartition.from_v1(n, small_v1))
    for small_v2 in _small_sides(n, k - b):
        consider(Bipartition.from_v1(n, set(range(n)) - set(small_v2)))

    for A in combinations(range(n), a):
        rest_a = [v for v in range(n) if v not in A]
        for B in combinations(rest_a, k - b):
            U = A + B
            remaining = [v for v in range(n) if v not in U]
            L = link(G, U)
            for Q in enumerate_sparse_dense(L, Orientation.CLIQUE_FIRST):
                v1 = set(A)
                v1.update(remaining[i] for i in Q.v1)
                consider(Bipartition.from_v1(n, v1))
    found.sort(key=Bipartition.sort_key)
    return found


def solve_mixed(G: Hypergraph, pi: PiVector) -> list[Bipartition]:
    """Every pi-partition of ``G`` for a pattern containing both 0 and 1, sorted."""
    _require_dims(G, pi)
    if not pi.has_both_zero_and_one:
        raise ApplicabilityError(f"pattern {pi} does not contain both 0 and 1")
    a, b, rev = _choose_pair(pi)
    if not rev:
        return _solve_oriented(G, pi, a, b)
    swapped = [P.swapped() for P in _solve_oriented(G, reverse_pi(pi), a, b)]
    swapped.sort(key=Bipartition.sort_key)
    return swapped


def enumerate_pi_01(G: Hypergraph, pi: PiVector) -> list[Bipartition]:
    """Every pi-partition when ``pi_0 = 0`` and ``pi_k = 1``.

    Such partitions have ``V1`` a clique and ``V2`` independent, so they are
    a filtered subfamily of the clique-first sparse-dense enumeration.
    """
    _require_dims(G, pi)
    if pi[0] != ZERO or pi[-1] != ONE:
        raise ApplicabilityError(f"pattern {pi} needs pi_0 = 0 and pi_k = 1")
    candidates = enumerate_sparse_dense(G, Orientation.CLIQUE_FIRST)
    return [P for P in candidates if check_partition(G, pi, P) is None]
