"""Exhaustive ground-truth oracle over all 2^n bipartitions.

Bipartitions are scanned as integers whose most significant bit is vertex 0,
so numeric order equals the lexicographic order of the ``V1`` characteristic
string. The scan is vectorized with numpy in chunks.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ..core import Bipartition, Hypergraph, PiVector, _require_dims
from ..errors import ResourceError, UsageError

DEFAULT_MAX_N = 24
_CHUNK_CELLS = 1 << 22


def _constrained_subsets(G: Hypergraph, pi: PiVector):
    """k-subsets that some count could violate, with their allowed-count rows."""
    k = G.k
    edge_row = [pi.allows(c, True) for c in range(k + 1)]
    non_edge_row = [pi.allows(c, False) for c in range(k + 1)]
    subsets, rows = [], []
    if not all(edge_row):
        for e in sorted(G.edges):
            subsets.append(e)
            rows.append(edge_row)
    if not all(non_edge_row):
        for X in combinations(range(G.n), k):
            if X not in G.edges:
                subsets.append(X)
                rows.append(non_edge_row)
    return subsets, rows


def _valid_masks(G: Hypergraph, pi: PiVector):
    n, k = G.n, G.k
    subsets, rows = _constrained_subsets(G, pi)
    total = 1 << n
    if not subsets:
        yield np.arange(total, dtype=np.int64)
        return
    shifts = np.array([[n - 1 - v for v in X] for X in subsets], dtype=np.int64)
    allowed = np.array(rows, dtype=bool)
    cols = np.arange(len(subsets))
    chunk = max(1, _CHUNK_CELLS // len(subsets))
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        counts = np.zeros((masks.size, len(subsets)), dtype=np.int8)
        for j in range(k):
            counts += ((masks[:, None] >> shifts[None, :, j]) & 1).astype(np.int8)
        ok = allowed[cols[None, :], counts].all(axis=1)
        yield masks[ok]


def _to_partition(mask: int, n: int) -> Bipartition:
    return Bipartition(tuple(bool((mask >> (n - 1 - v)) & 1) for v in range(n)))


def brute_force(G: Hypergraph, pi: PiVector, mode: str = "all", max_n: int = DEFAULT_MAX_N):
    """Exact answer by exhausting every bipartition.

    ``mode="all"`` returns the sorted list of all pi-partitions;
    ``mode="first"`` returns the lexicographically least one or ``None``.
    """
    _require_dims(G, pi)
    if mode not in ("all", "first"):
        raise UsageError(f"mode must be 'all' or 'first', got {mode!r}")
    if G.n > max_n:
        raise ResourceError(f"brute force capped at n={max_n}, got n={G.n}")
    if mode == "first":
        for valid in _valid_masks(G, pi):
            if valid.size:
                return _to_partition(int(valid[0]), G.n)
        return None
    return [_to_partition(int(m), G.n) for valid in _valid_masks(G, pi) for m in valid]


def brute_force_count(G: Hypergraph, pi: PiVector, max_n: int = DEFAULT_MAX_N) -> int:
    _require_dims(G, pi)
    if G.n > max_n:
        raise ResourceError(f"brute force capped at n={max_n}, got n={G.n}")
    return sum(int(valid.size) for valid in _valid_masks(G, pi))
