"""Hardness-transferring reductions between 1-free patterns.

Each builder returns a :class:`ReductionRecord`; :func:`pull_back` maps a
solution of the output instance to one of the input, and
:func:`push_forward` maps an input solution to an output solution.
"""

from __future__ import annotations

from ..core import STAR, Bipartition, Hypergraph, PiVector, _require_dims, check_partition
from ..errors import ApplicabilityError
from ..patterns import (
    blowup_obstruction,
    interleave_zeros,
    prepend_zero,
    prepend_zero_plan,
    sigma,
    sigma_obstruction,
)
from .record import ReductionRecord, Role, original, require_valid


def _one_free(pi: PiVector, what: str) -> None:
    if not pi.is_one_free:
        raise ApplicabilityError(f"{what} needs a 1-free pattern, got {pi}")


def sigma_lift(G: Hypergraph, pi: PiVector) -> ReductionRecord:
    """Add ``k + 1`` apex vertices; every edge is extended by each apex in turn.

    The apices also form one edge on their own, which keeps them from all
    landing on one side when ``pi`` has 0 at both ends.
    """
    _require_dims(G, pi)
    _one_free(pi, "sigma lift")
    if pi.is_all_zero:
        raise ApplicabilityError("sigma lift is not a reduction for the all-0 pattern")
    bad = sigma_obstruction(pi)
    if bad is not None:
        raise ApplicabilityError(
            f"sigma lift needs no i with pi_i = pi_(i+2) = * and pi_(i+1) = 0; fails at i={bad} in {pi}"
        )
    n, k = G.n, G.k
    apex = list(range(n, n + k + 1))
    edges = [e + (u,) for e in G.edges for u in apex]
    edges.append(tuple(apex))
    roles = tuple(original(v) for v in range(n)) + tuple(Role("apex", (i,)) for i in range(1, k + 2))
    out = Hypergraph(n + k + 1, k + 1, edges)
    return ReductionRecord("sigma", G, pi, out, sigma(pi), roles)


def blowup(G: Hypergraph, pi: PiVector, j: tuple[int, ...], pi_out: PiVector) -> ReductionRecord:
    """Replace each vertex by ``k'`` copies held together by anchor edges.

    Vertex ``u`` gets copies ``u^1..u^k'`` and anchors ``w_u^1..w_u^(k'-1)``
    with edges ``{w_u^1, ..., w_u^(k'-1), u^i}``; since ``pi_out`` has no two
    adjacent Stars, all copies of ``u`` share a side. An input edge
    ``v_1 < ... < v_k`` becomes the union of the first ``j_m`` copies of
    each ``v_m``.
    """
    _require_dims(G, pi)
    _one_free(pi, "blow-up source")
    _one_free(pi_out, "blow-up target")
    j = tuple(j)
    kp = pi_out.k
    if len(j) != pi.k or any(x < 0 for x in j):
        raise ApplicabilityError(f"copy counts {j} must be {pi.k} non-negative integers")
    if sum(j) != kp:
        raise ApplicabilityError(f"copy counts {j} sum to {sum(j)}, target uniformity is {kp}")
    if pi_out.has_consecutive_stars:
        raise ApplicabilityError(f"blow-up target {pi_out} has consecutive Stars")
    if not any(pi_out[m] == STAR for m in range(1, kp)):
        raise ApplicabilityError(f"blow-up target {pi_out} has no Star strictly inside")
    bad = blowup_obstruction(pi, pi_out, j)
    if bad is not None:
        raise ApplicabilityError(f"copy counts {j} incompatible with {pi} -> {pi_out} at I={set(bad)}")

    block = 2 * kp - 1

    def copy(u: int, i: int) -> int:
        return u * block + i - 1

    def anchor(u: int, i: int) -> int:
        return u * block + kp + i - 1

    roles: list[Role] = []
    edges = []
    for u in range(G.n):
        roles.extend(Role("copy", (u, i)) for i in range(1, kp + 1))
        roles.extend(Role("anchor", (u, i)) for i in range(1, kp))
        anchors = tuple(anchor(u, i) for i in range(1, kp))
        edges.extend(anchors + (copy(u, i),) for i in range(1, kp + 1))
    for e in G.edges:
        edges.append(tuple(copy(v, i) for v, jm in zip(e, j) for i in range(1, jm + 1)))
    out = Hypergraph(G.n * block, kp, edges)
    return ReductionRecord("blowup", G, pi, out, pi_out, tuple(roles), {"j": j})


def doubling(G: Hypergraph, pi: PiVector) -> ReductionRecord:
    """Blow-up with every copy count 2, targeting ``pi`` interleaved with zeros."""
    return blowup(G, pi, (2,) * pi.k, interleave_zeros(pi))


def prepend_zero_reduction(G: Hypergraph, pi: PiVector) -> ReductionRecord:
    """Reduce ``pi`` to ``(0, pi_0, ..., pi_k)``.

    Branch A (``(0, pi)`` is ``reverse(pi)`` followed by 0): add one vertex
    to every edge. Branch B: add ``u_1..u_2k`` and ``w_1..w_(k+1)`` with
    edges ``{u_1..u_k, w_i}`` for ``i <= m+1``, ``{u_(k+1)..u_2k, w_i}`` for
    ``i >= m+2``, ``{w_1..w_(k+1)}`` and ``e + w_1`` for every input edge.
    The gadget forces ``w_1`` into V1, which shifts every edge count by one.
    """
    _require_dims(G, pi)
    _one_free(pi, "prepend-0")
    branch, m = prepend_zero_plan(pi)
    n, k = G.n, G.k
    roles = [original(v) for v in range(n)]
    if branch == "A":
        u = n
        roles.append(Role("apex", (1,)))
        out = Hypergraph(n + 1, k + 1, [e + (u,) for e in G.edges])
        return ReductionRecord("prepend0", G, pi, out, prepend_zero(pi), tuple(roles), {"branch": "A"})

    us = [n + i for i in range(2 * k)]
    ws = [n + 2 * k + i for i in range(k + 1)]
    roles.extend(Role("u", (i,)) for i in range(1, 2 * k + 1))
    roles.extend(Role("w", (i,)) for i in range(1, k + 2))
    edges = [tuple(us[:k]) + (ws[i],) for i in range(m + 1)]
    edges += [tuple(us[k:]) + (ws[i],) for i in range(m + 1, k + 1)]
    edges += [e + (ws[0],) for e in G.edges]
    edges.append(tuple(ws))
    out = Hypergraph(n + 3 * k + 1, k + 1, edges)
    return ReductionRecord("prepend0", G, pi, out, prepend_zero(pi), tuple(roles), {"branch": "B", "m": m})


def _one_sided(pi: PiVector, n: int) -> Bipartition:
    return Bipartition.all_v2(n) if pi[0] == STAR else Bipartition.all_v1(n)


def pull_back(rec: ReductionRecord, P: Bipartition) -> Bipartition:
    """Decode a valid output partition into a valid input partition."""
    require_valid(rec.output, rec.output_pi, P, f"pull_back ({rec.kind})")
    G, pi = rec.source, rec.source_pi
    if rec.kind == "sigma":
        result = P.restrict(rec.original_vertices())
        if pi.is_trivial and check_partition(G, pi, result) is not None:
            # apices may sit on one side only when an end of pi is a Star
            result = _one_sided(pi, G.n)
    elif rec.kind == "blowup":
        firsts = rec.vertices_with("copy")
        result = Bipartition(tuple(P.in_v1[firsts[(u, 1)]] for u in range(G.n)))
    elif rec.kind == "prepend0":
        result = P.restrict(rec.original_vertices())
        if rec.params["branch"] == "A":
            apex = rec.vertices_with("apex")[(1,)]
            if not P.in_v1[apex]:
                result = result.swapped()
    else:
        raise ApplicabilityError(f"no generic pull-back for reduction kind {rec.kind!r}")
    require_valid(G, pi, result, f"pull_back ({rec.kind}) result")
    return result


def push_forward(rec: ReductionRecord, P: Bipartition) -> Bipartition:
    """Build the output solution that the construction assigns to a valid input solution."""
    G, pi = rec.source, rec.source_pi
    require_valid(G, pi, P, f"push_forward ({rec.kind})")
    out, pi_out = rec.output, rec.output_pi
    v1 = set()
    if rec.kind == "sigma":
        v1.update(v for v in range(G.n) if P.in_v1[v])
        apex = rec.vertices_with("apex")
        # one apex in V1, or the first count the lifted pattern leaves free
        count = next(j for j in range(1, G.k + 2) if pi_out[j] == STAR)
        v1.update(apex[(i,)] for i in range(1, count + 1))
    elif rec.kind == "blowup":
        kp = pi_out.k
        m = next(i for i in range(1, kp) if pi_out[i] == STAR)
        copies, anchors = rec.vertices_with("copy"), rec.vertices_with("anchor")
        for u in range(G.n):
            if P.in_v1[u]:
                v1.update(copies[(u, i)] for i in range(1, kp + 1))
            v1.update(anchors[(u, i)] for i in range(1, m))
            if not P.in_v1[u]:
                v1.add(anchors[(u, m)])
    elif rec.kind == "prepend0":
        v1.update(v for v in range(G.n) if P.in_v1[v])
        if rec.params["branch"] == "A":
            v1.add(rec.vertices_with("apex")[(1,)])
        else:
            k, m = G.k, rec.params["m"]
            us, ws = rec.vertices_with("u"), rec.vertices_with("w")
            v1.update(ws[(i,)] for i in range(1, m + 2))
            v1.update(us[(i,)] for i in range(1, m + 1))
            v1.update(us[(i,)] for i in range(k + 1, k + m + 2))
    else:
        raise ApplicabilityError(f"no generic push-forward for reduction kind {rec.kind!r}")
    result = Bipartition.from_v1(out.n, v1)
    require_valid(out, pi_out, result, f"push_forward ({rec.kind}) result")
    return result
