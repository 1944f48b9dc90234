"""Alternating patterns as linear systems over GF(2).

For ``pi = (0, *, 0, *, ...)`` a bipartition works exactly when every edge
meets ``V1`` an odd number of times, i.e. ``Mx = 1`` where ``M`` is the
edge-vertex incidence matrix. Rows are held as Python ints (bit ``v`` set
when vertex ``v`` is in the edge).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Bipartition, Hypergraph, PiVector, _require_dims, check_partition
from ..errors import ApplicabilityError


@dataclass(frozen=True)
class LinearSystem:
    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_hypergraph(cls, G: Hypergraph) -> LinearSystem:
        rows = []
        for e in G.sorted_edges():
            r = 0
            for v in e:
                r |= 1 << v
            rows.append(r)
        return cls(G.n, tuple(rows))

    @property
    def rhs(self) -> tuple[int, ...]:
        return (1,) * len(self.rows)


def eliminate(n: int, rows, rhs):
    """Reduce ``[rows | rhs]`` to reduced row echelon form.

    Returns ``(pivots, consistent)`` where ``pivots`` maps pivot column to
    ``(row, rhs_bit)``. A ``0 = 1`` row makes the system inconsistent.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for row, b in zip(rows, rhs):
        for col, (prow, pb) in pivots.items():
            if row >> col & 1:
                row ^= prow
                b ^= pb
        if row == 0:
            if b:
                return pivots, False
            continue
        col = (row & -row).bit_length() - 1
        for c, (prow, pb) in list(pivots.items()):
            if prow >> col & 1:
                pivots[c] = (prow ^ row, pb ^ b)
        pivots[col] = (row, b)
    return pivots, True


def solve_gf2(system: LinearSystem) -> list[int] | None:
    """One solution of ``Mx = 1`` with every free variable set to 0, or ``None``."""
    pivots, ok = eliminate(system.n, system.rows, system.rhs)
    if not ok:
        return None
    x = [0] * system.n
    for col, (_, b) in pivots.items():
        x[col] = b
    return x


def solve_alternating(G: Hypergraph, pi: PiVector) -> Bipartition | None:
    """A pi-partition for an alternating ``pi``, or ``None`` when none exists."""
    _require_dims(G, pi)
    if not pi.is_alternating:
        raise ApplicabilityError(f"pattern {pi} is not alternating (0 at even, * at odd indices)")
    x = solve_gf2(LinearSystem.from_hypergraph(G))
    if x is None:
        return None
    P = Bipartition(tuple(bool(b) for b in x))
    assert check_partition(G, pi, P) is None
    return P
