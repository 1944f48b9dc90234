"""Complexity verdicts for pi-partition problems.

Verdicts for ``k <= 5`` come from the known dichotomy tables. A closure
engine, which chains hardness-transferring reductions backwards from the
two base NP-complete patterns ``0**0`` and ``0*00``, supplies the
derivation for every NP-complete verdict, cross-checks the tables, and is
the only source of hardness for ``k >= 6``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .core import STAR, ZERO, PiVector, complement_pi, reverse_pi
from .errors import ApplicabilityError
from .patterns import (
    deinterleave,
    interleave_zeros,
    prepend_zero,
    prepend_zero_applicable,
    sigma,
    sigma_obstruction,
    sigma_preimages,
)

DEFAULT_DEPTH = 6

NP_TABLE = {
    3: frozenset({"0**0", "1**1", "00*0", "0*00", "1*11", "11*1"}),
    4: frozenset({
        "0***0", "0**00", "00**0", "0*000", "000*0", "00*00",
        "1***1", "1**11", "11**1", "1*111", "111*1", "11*11",
    }),
    # stated for pi_0 = 0 only
    5: frozenset({
        "0****0", "0***00", "00***0", "000**0", "00**00",
        "0**000", "0000*0", "000*00", "00*000", "0*0000",
    }),
}
OPEN_K5 = frozenset({"0*00*0", "0**0*0", "0*0**0", "0*0*00", "00*0*0"})

ANCHORS = {
    "small-k": "every pattern with k <= 2 is polynomial",
    "trivial-end": "a Star at either end admits a one-sided partition",
    "mixed": "patterns with both 0 and 1 have polynomially many solutions",
    "complement": "complementing the hypergraph swaps 0 and 1",
    "reverse": "swapping the sides reverses the pattern",
    "all-zero": "all-0 pattern holds iff the hypergraph is edgeless",
    "alternating": "alternating pattern is a GF(2) linear system",
    "base-2coloring": "2-colouring 3-uniform hypergraphs is NP-complete (Lovasz)",
    "base-3sat": "3-SAT reduces to the 0*00 pattern",
    "sigma": "apex-vertex lift from k to k+1",
    "double": "copy blow-up with every copy count equal to 2",
    "prepend0": "gadget reduction prepending a 0",
    "single-star": "a single interior Star with 0 at both ends is NP-complete",
    "open-k5": "excluded from the k = 5 dichotomy",
    "table": "dichotomy table lookup",
    "open": "no hardness derivation within the search depth",
}


class Status(enum.Enum):
    POLYNOMIAL = "Polynomial"
    NP_COMPLETE = "NPComplete"
    OPEN = "Open"


@dataclass(frozen=True)
class Step:
    rule: str
    source: PiVector
    target: PiVector

    @property
    def anchor(self) -> str:
        return ANCHORS[self.rule]

    def __str__(self) -> str:
        return f"step {self.rule} {self.source} -> {self.target}"


@dataclass(frozen=True)
class ComplexityVerdict:
    status: Status
    derivation: tuple[Step, ...]

    def report(self) -> str:
        return "\n".join([f"verdict {self.status.value}", *map(str, self.derivation)]) + "\n"


@dataclass(frozen=True)
class NormalizationLog:
    applied: tuple[str, ...]
    result: PiVector

    def steps(self, start: PiVector) -> list[Step]:
        out, cur = [], start
        for rule in self.applied:
            nxt = _apply_symmetry(rule, cur)
            out.append(Step(rule, cur, nxt))
            cur = nxt
        return out


def _apply_symmetry(rule: str, pi: PiVector) -> PiVector:
    return complement_pi(pi) if rule == "complement" else reverse_pi(pi)


def normalize(pi: PiVector) -> NormalizationLog:
    """Complement if every non-Star entry is 1, then take the lesser of ``v`` and its reversal."""
    applied = []
    cur = pi
    fixed = set(pi) - {STAR}
    if fixed == {"1"}:
        cur = complement_pi(cur)
        applied.append("complement")
    rev = reverse_pi(cur)
    if rev.entries < cur.entries:
        cur = rev
        applied.append("reverse")
    return NormalizationLog(tuple(applied), cur)


def _is_single_star(pi: PiVector) -> bool:
    return pi.k >= 3 and pi.is_one_free and pi.entries.count(STAR) == 1 and pi[0] == pi[-1] == ZERO


def _hardness_candidate(pi: PiVector) -> bool:
    """1-free, 0 at both ends, and not already known polynomial."""
    return (
        pi.is_one_free
        and pi[0] == ZERO
        and pi[-1] == ZERO
        and not pi.is_all_zero
        and not pi.is_alternating
        and pi.k >= 3
    )


def _predecessors(pi: PiVector):
    """Patterns whose hardness transfers to ``pi`` in one reduction step."""
    for p in sigma_preimages(pi):
        if sigma_obstruction(p) is None:
            yield "sigma", p
    d = deinterleave(pi)
    if d is not None:
        yield "double", d
    if pi[0] == ZERO:
        p = PiVector(pi.entries[1:])
        if p.is_one_free and prepend_zero_applicable(p):
            yield "prepend0", p


@lru_cache(maxsize=None)
def _derive(entries: str, depth: int) -> tuple[Step, ...] | None:
    pi = PiVector(entries)
    if not _hardness_candidate(pi):
        return None
    if entries == "0**0":
        return (Step("base-2coloring", pi, pi),)
    base = PiVector("0*00")
    if entries == "0*00":
        return (Step("base-3sat", pi, pi),)
    if entries == "00*0":
        return (Step("base-3sat", base, base), Step("reverse", base, pi))
    if _is_single_star(pi):
        return (Step("base-3sat", base, base), Step("single-star", base, pi))
    if depth == 0:
        return None
    best = None
    rev = reverse_pi(pi)
    views = [(pi, ())] if rev == pi else [(pi, ()), (rev, (Step("reverse", rev, pi),))]
    for view, tail in views:
        for rule, pred in _predecessors(view):
            sub = _derive(pred.entries, depth - 1)
            if sub is None:
                continue
            chain = sub + (Step(rule, pred, view),) + tail
            if best is None or len(chain) < len(best):
                best = chain
    return best


def derive_hardness(pi: PiVector, depth: int = DEFAULT_DEPTH) -> tuple[Step, ...] | None:
    """Shortest reduction chain (within ``depth`` transfer steps) from a base pattern to ``pi``."""
    return _derive(pi.entries, depth)


def apply_rule(rule: str, source: PiVector, target: PiVector) -> bool:
    """Whether ``rule`` legitimately maps ``source`` to ``target``."""
    if rule in ("complement", "reverse"):
        return _apply_symmetry(rule, source) == target
    if rule == "sigma":
        return source.is_one_free and sigma_obstruction(source) is None and sigma(source) == target
    if rule == "double":
        return source.is_one_free and interleave_zeros(source) == target
    if rule == "prepend0":
        return source.is_one_free and prepend_zero_applicable(source) and prepend_zero(source) == target
    if rule == "single-star":
        return source.entries == "0*00" and _is_single_star(target)
    if rule == "base-2coloring":
        return source == target == PiVector("0**0")
    if rule == "base-3sat":
        return source == target == PiVector("0*00")
    return source == target


def replay(derivation: tuple[Step, ...]) -> PiVector:
    """Check a derivation step by step and return the pattern it ends at."""
    if not derivation:
        raise ApplicabilityError("empty derivation")
    cur = derivation[0].source
    for step in derivation:
        if step.source != cur or not apply_rule(step.rule, step.source, step.target):
            raise ApplicabilityError(f"derivation breaks at {step}")
        cur = step.target
    return cur


def _table_status(q: PiVector) -> Status:
    if q.k == 5 and q.entries in OPEN_K5:
        return Status.OPEN
    if q.entries in NP_TABLE[q.k]:
        return Status.NP_COMPLETE
    return Status.POLYNOMIAL


def classify(pi: PiVector, depth: int = DEFAULT_DEPTH) -> ComplexityVerdict:
    """Polynomial, NP-complete or open, with the chain of facts that decides it."""

    def discharged(status: Status, rule: str, prefix=(), at: PiVector = pi) -> ComplexityVerdict:
        return ComplexityVerdict(status, (*prefix, Step(rule, at, at)))

    if pi.k <= 2:
        return discharged(Status.POLYNOMIAL, "small-k")
    if pi.is_trivial:
        return discharged(Status.POLYNOMIAL, "trivial-end")
    if pi.has_both_zero_and_one:
        return discharged(Status.POLYNOMIAL, "mixed")

    log = normalize(pi)
    q = log.result
    forward = tuple(log.steps(pi))
    if q.is_all_zero:
        return discharged(Status.POLYNOMIAL, "all-zero", forward, q)
    if q.is_alternating:
        return discharged(Status.POLYNOMIAL, "alternating", forward, q)

    chain = derive_hardness(q, depth)
    backward = tuple(Step(s.rule, s.target, s.source) for s in reversed(forward))
    if q.k in NP_TABLE:
        status = _table_status(q)
        if status is not Status.NP_COMPLETE:
            if chain is not None:
                raise RuntimeError(f"closure engine derives hardness for {q}, contradicting the k={q.k} table")
            rule = "open-k5" if status is Status.OPEN else "table"
            return discharged(status, rule, forward, q)
        if chain is None:
            return ComplexityVerdict(status, (Step("table", q, q), *backward))
        return ComplexityVerdict(status, chain + backward)

    if chain is None:
        return discharged(Status.OPEN, "open", forward, q)
    return ComplexityVerdict(Status.NP_COMPLETE, chain + backward)
