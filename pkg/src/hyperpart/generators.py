"""Deterministic hypergraph families."""

from __future__ import annotations

import random
from itertools import combinations

from .core import Hypergraph
from .errors import UsageError


def cycle(m: int, k: int) -> Hypergraph:
    """The k-uniform m-cycle: vertices Z_m, one edge per window of k consecutive residues."""
    if m < k:
        raise UsageError(f"cycle needs m >= k, got m={m}, k={k}")
    windows = {tuple(sorted((i + t) % m for t in range(k))) for i in range(m)}
    return Hypergraph(m, k, windows)


def complete(n: int, k: int) -> Hypergraph:
    return Hypergraph(n, k, combinations(range(n), k))


def empty(n: int, k: int) -> Hypergraph:
    return Hypergraph(n, k)


def random_hypergraph(n: int, k: int, p: float, seed: int | None = None) -> Hypergraph:
    """Include each k-subset independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise UsageError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Hypergraph(n, k, [X for X in combinations(range(n), k) if rng.random() < p])


def generate(kind: str, *args, **kwargs) -> Hypergraph:
    """Dispatch by family name: ``cycle``, ``complete``, ``empty`` or ``random``."""
    try:
        factory = {"cycle": cycle, "complete": complete, "empty": empty, "random": random_hypergraph}[kind]
    except KeyError:
        raise UsageError(f"unknown hypergraph family {kind!r}") from None
    return factory(*args, **kwargs)
