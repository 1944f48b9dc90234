"""Pattern-level maps underlying the hardness-transfer reductions."""

from __future__ import annotations

from itertools import combinations

from .core import STAR, ZERO, PiVector, reverse_pi
from .errors import ApplicabilityError


def _require_one_free(pi: PiVector, what: str) -> None:
    if not pi.is_one_free:
        raise ApplicabilityError(f"{what} is defined on 1-free patterns only, got {pi}")


def sigma(pi: PiVector) -> PiVector:
    """Lengthen by one, smearing every Star one index to the right."""
    _require_one_free(pi, "sigma")
    k = pi.k
    out = [pi[0]]
    for i in range(1, k + 1):
        out.append(STAR if STAR in (pi[i], pi[i - 1]) else ZERO)
    out.append(pi[k])
    return PiVector("".join(out))


def sigma_obstruction(pi: PiVector) -> int | None:
    """Smallest ``i`` with ``pi_i = pi_{i+2} = *`` and ``pi_{i+1} = 0``, if any."""
    for i in range(pi.k - 1):
        if pi[i] == STAR and pi[i + 1] == ZERO and pi[i + 2] == STAR:
            return i
    return None


def sigma_preimages(pi: PiVector) -> list[PiVector]:
    """All 1-free ``p`` with ``sigma(p) == pi``."""
    if not pi.is_one_free or pi.k < 2:
        return []
    inner = pi.k - 2
    out = []
    for stars in range(inner + 1):
        for pos in combinations(range(1, pi.k - 1), stars):
            cand = [ZERO] * (pi.k)
            cand[0], cand[-1] = pi[0], pi[-1]
            for p in pos:
                cand[p] = STAR
            p_vec = PiVector("".join(cand))
            if sigma(p_vec) == pi:
                out.append(p_vec)
    return out


def interleave_zeros(pi: PiVector) -> PiVector:
    """``(pi_0, 0, pi_1, 0, ..., 0, pi_k)``: the target of the doubling blow-up."""
    _require_one_free(pi, "doubling")
    return PiVector(ZERO.join(pi.entries))


def deinterleave(pi: PiVector) -> PiVector | None:
    if pi.k % 2 or any(pi[i] != ZERO for i in range(1, pi.k, 2)):
        return None
    return PiVector(pi.entries[::2])


def blowup_obstruction(pi: PiVector, pi_out: PiVector, j: tuple[int, ...]) -> tuple[int, ...] | None:
    """First index set ``I`` (1-based) breaking copy-count compatibility, if any.

    Compatibility requires ``pi_out[sum(j_m for m in I)] == pi[|I|]`` for
    every ``I`` within ``{1..k}``.
    """
    k = pi.k
    for size in range(k + 1):
        for I in combinations(range(1, k + 1), size):
            total = sum(j[m - 1] for m in I)
            if total > pi_out.k or pi_out[total] != pi[size]:
                return I
    return None


def prepend_zero_plan(pi: PiVector) -> tuple[str, int | None]:
    """Choose the prepend-0 construction for ``pi``.

    Returns ``("A", None)`` when ``(0, pi)`` equals ``reverse(pi)`` followed
    by 0 (one universal vertex suffices), else ``("B", m)`` with the least
    ``m`` such that ``pi_m = *`` and ``pi_{k-m-1} = 0``, which also needs
    ``pi`` free of consecutive Stars.
    """
    _require_one_free(pi, "prepend-0")
    if ZERO + pi.entries == reverse_pi(pi).entries + ZERO:
        return "A", None
    if pi.has_consecutive_stars:
        raise ApplicabilityError(f"prepend-0 needs no consecutive Stars in {pi} (non-palindromic case)")
    k = pi.k
    for m in range(k):
        if pi[m] == STAR and pi[k - m - 1] == ZERO:
            return "B", m
    raise ApplicabilityError(f"prepend-0: no m with pi_m = * and pi_(k-m-1) = 0 in {pi}")


def prepend_zero_applicable(pi: PiVector) -> bool:
    try:
        prepend_zero_plan(pi)
    except ApplicabilityError:
        return False
    return True


def prepend_zero(pi: PiVector) -> PiVector:
    return PiVector(ZERO + pi.entries)
