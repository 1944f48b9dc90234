"""Route an instance to the cheapest exact method for its pattern shape."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..core import (
    ONE,
    STAR,
    ZERO,
    Bipartition,
    Hypergraph,
    PiVector,
    _require_dims,
    check_partition,
    complement_hypergraph,
    complement_pi,
)
from .backtrack import backtrack_first, backtrack_solutions
from .gf2 import solve_alternating
from .mixed import solve_mixed


@dataclass(frozen=True)
class Answer:
    partition: Bipartition | None
    method: str

    @property
    def satisfiable(self) -> bool:
        return self.partition is not None


def _checked(G: Hypergraph, pi: PiVector, P: Bipartition | None, method: str) -> Answer:
    if P is not None:
        violation = check_partition(G, pi, P)
        assert violation is None, f"{method} returned an invalid partition: {violation}"
    return Answer(P, method)


def solve(G: Hypergraph, pi: PiVector) -> Answer:
    """Decide pi-partitionability and return a witness plus the method used.

    Methods: ``trivial`` (a Star at either end), ``all-zero``, ``all-one``,
    ``mixed``, ``alternating`` and ``fallback``.
    """
    _require_dims(G, pi)
    n = G.n
    if pi[0] == STAR:
        return _checked(G, pi, Bipartition.all_v2(n), "trivial")
    if pi[-1] == STAR:
        return _checked(G, pi, Bipartition.all_v1(n), "trivial")

    values = set(pi) - {STAR}
    if pi.has_both_zero_and_one:
        found = solve_mixed(G, pi)
        return _checked(G, pi, found[0] if found else None, "mixed")
    if values == {ZERO} and STAR not in pi.entries:
        return _checked(G, pi, Bipartition.all_v2(n) if G.m == 0 else None, "all-zero")
    if values == {ONE} and STAR not in pi.entries:
        ok = complement_hypergraph(G).m == 0
        return _checked(G, pi, Bipartition.all_v2(n) if ok else None, "all-one")
    if pi.is_alternating:
        return _checked(G, pi, solve_alternating(G, pi), "alternating")
    if complement_pi(pi).is_alternating:
        return _checked(G, pi, solve_alternating(complement_hypergraph(G), complement_pi(pi)), "alternating")
    return _checked(G, pi, backtrack_first(G, pi), "fallback")


def solve_all(G: Hypergraph, pi: PiVector) -> tuple[str, Iterator[Bipartition]]:
    """Every pi-partition in lexicographic order, produced lazily where possible."""
    _require_dims(G, pi)
    if pi.has_both_zero_and_one:
        return "mixed", iter(solve_mixed(G, pi))
    return "fallback", backtrack_solutions(G, pi)
