"""3-SAT to the ``0*00`` pattern.

Per variable ``i`` there are eight vertices
``x_i^1, ~x_i^1, u_i^1, x_i^2, ~x_i^2, u_i^2, u_i^3, u_i^4``. In that cyclic
order the first six carry the six windows of a 3-uniform 6-cycle, whose only
``0*00``-partitions put one antipodal pair in V1. The forcing triangle on
``u_i^1..u_i^4`` has the unique solution ``V1 = {u_i^4}``, which keeps the
``u`` pair out of V1, so either both ``x`` copies or both ``~x`` copies sit in
V1. A literal is true when its vertex is in V2.

Per clause ``j`` there are six vertices ``w_j^1..w_j^6`` and edges
``{lit_t, w_j^(2t-1), w_j^(2t)}`` for ``t = 1, 2, 3`` plus
``{w_j^2, w_j^4, w_j^6}``. A literal repeated inside a clause uses its second
copy on the second occurrence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from ..core import Bipartition, Hypergraph, PiVector
from ..errors import ApplicabilityError, ParseError, UsageError
from .record import ReductionRecord, Role, require_valid

SAT_PI = PiVector("0*00")
_GADGET_H = Hypergraph(4, 3, [(0, 1, 3), (0, 2, 3), (1, 2, 3)])
_VAR_SLOTS = ("x1", "nx1", "u1", "x2", "nx2", "u2", "u3", "u4")
_CYCLE = ("x1", "nx1", "u1", "x2", "nx2", "u2")


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        for c in clauses:
            if len(c) != 3:
                raise UsageError(f"clause {c} does not have exactly 3 literals")
            if any(lit == 0 or abs(lit) > self.num_vars for lit in c):
                raise UsageError(f"clause {c} has a literal outside 1..{self.num_vars}")
        object.__setattr__(self, "clauses", clauses)

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(lit)] == (lit > 0) for lit in c) for c in self.clauses)


class Trivial(enum.Enum):
    TRUE = "trivially-true"
    FALSE = "trivially-false"


def brute_force_sat(phi: CnfFormula) -> dict[int, bool] | None:
    """First satisfying assignment in lexicographic order, or ``None``."""
    for bits in product((False, True), repeat=phi.num_vars):
        assignment = dict(enumerate(bits, start=1))
        if phi.satisfied_by(assignment):
            return assignment
    return None


def _retriple(lits: list[int]) -> list[int]:
    distinct = list(dict.fromkeys(lits))
    if len(distinct) == 1:
        return distinct * 3
    if len(distinct) == 2:
        return [distinct[0], distinct[0], distinct[1]]
    return distinct


def preprocess_cnf(phi: CnfFormula) -> tuple[CnfFormula | Trivial, dict[int, bool]]:
    """Eliminate clauses made of one literal repeated three times.

    Such a clause forces its literal: every clause containing it is dropped
    and its negation is deleted elsewhere. Shortened clauses are padded back
    to width three by repeating their first literal. Repeats until no
    triple-equal clause remains; also returns the forced values.
    """
    clauses = [list(c) for c in phi.clauses]
    forced: dict[int, bool] = {}
    while True:
        unit = next((c[0] for c in clauses if len(set(c)) == 1), None)
        if unit is None:
            break
        forced[abs(unit)] = unit > 0
        reduced = []
        for c in clauses:
            if unit in c:
                continue
            rest = [lit for lit in c if lit != -unit]
            if not rest:
                return Trivial.FALSE, forced
            reduced.append(rest if len(rest) == len(c) else _retriple(rest))
        clauses = reduced
    if not clauses:
        return Trivial.TRUE, forced
    return CnfFormula(phi.num_vars, tuple(map(tuple, clauses))), forced


def reduce_sat(phi: CnfFormula | Trivial, forced: dict[int, bool] | None = None, source=None) -> ReductionRecord:
    """Build the ``0*00`` instance of a preprocessed formula.

    Trivially decided formulas map to the forcing gadget (yes) or the
    complete 3-graph on four vertices (no).
    """
    forced = dict(forced or {})
    if isinstance(phi, Trivial):
        out = _GADGET_H if phi is Trivial.TRUE else Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
        roles = tuple(Role("canon", (i,)) for i in range(4))
        return ReductionRecord("sat", source or phi, None, out, SAT_PI, roles,
                               {"trivial": phi.value, "forced": forced})

    index: dict[tuple, int] = {}
    roles: list[Role] = []

    def vertex(name: str, *idx: int) -> int:
        key = (name, idx)
        if key not in index:
            index[key] = len(roles)
            roles.append(Role(name, idx))
        return index[key]

    edges = []
    for i in range(1, phi.num_vars + 1):
        slot = {s: vertex(s[:-1], i, int(s[-1])) for s in _VAR_SLOTS}
        ring = [slot[s] for s in _CYCLE]
        edges.extend((ring[t], ring[(t + 1) % 6], ring[(t + 2) % 6]) for t in range(6))
        u1, u2, u3, u4 = slot["u1"], slot["u2"], slot["u3"], slot["u4"]
        edges.extend([(u1, u2, u4), (u1, u3, u4), (u2, u3, u4)])

    for j, clause in enumerate(phi.clauses, start=1):
        if len(set(clause)) == 1:
            raise ApplicabilityError(f"clause {j} {clause} repeats one literal three times; preprocess first")
        w = [vertex("w", j, t) for t in range(1, 7)]
        seen: dict[int, int] = {}
        for t, lit in enumerate(clause):
            seen[lit] = seen.get(lit, 0) + 1
            lit_vertex = index[("x" if lit > 0 else "nx", (abs(lit), seen[lit]))]
            edges.append((lit_vertex, w[2 * t], w[2 * t + 1]))
        edges.append((w[1], w[3], w[5]))

    out = Hypergraph(len(roles), 3, edges)
    return ReductionRecord("sat", source or phi, None, out, SAT_PI, tuple(roles),
                           {"forced": forced, "num_vars": phi.num_vars, "_formula": phi})


def reduce_3sat(phi: CnfFormula) -> ReductionRecord:
    """Preprocess ``phi`` and reduce it; the record's source is the original formula."""
    reduced, forced = preprocess_cnf(phi)
    return reduce_sat(reduced, forced, source=phi)


def _num_vars(rec: ReductionRecord) -> int:
    src = rec.source
    return src.num_vars if isinstance(src, CnfFormula) else 0


def pull_back_sat(rec: ReductionRecord, P: Bipartition) -> dict[int, bool]:
    """Assignment read off a valid partition: ``x_i`` is true iff ``x_i^1`` is in V2."""
    require_valid(rec.output, rec.output_pi, P, "pull_back_sat")
    assignment = {i: False for i in range(1, _num_vars(rec) + 1)}
    if "trivial" not in rec.params:
        copies = rec.vertices_with("x")
        for i in range(1, rec.params["num_vars"] + 1):
            assignment[i] = not P.in_v1[copies[(i, 1)]]
    assignment.update(rec.params["forced"])
    return assignment


def partition_from_assignment(rec: ReductionRecord, assignment: dict[int, bool]) -> Bipartition:
    """The solution built from a satisfying assignment of the reduced formula."""
    G = rec.output
    if "trivial" in rec.params:
        if rec.params["trivial"] == Trivial.FALSE.value:
            raise ApplicabilityError("formula is unsatisfiable")
        return Bipartition.from_v1(4, [3])
    v1 = set()
    for i, role in enumerate(rec.roles):
        name, idx = role
        if name in ("x", "nx"):
            true_literal = assignment[idx[0]] == (name == "x")
            if not true_literal:
                v1.add(i)
        elif name == "u" and idx[1] == 4:
            v1.add(i)
    w = rec.vertices_with("w")
    phi = rec.params["_formula"]
    for j, clause in enumerate(phi.clauses, start=1):
        truth = [assignment[abs(lit)] == (lit > 0) for lit in clause]
        if not any(truth):
            raise ApplicabilityError(f"assignment falsifies clause {j} {clause}")
        chosen = truth.index(True)
        for t in range(3):
            odd, even = w[(j, 2 * t + 1)], w[(j, 2 * t + 2)]
            if t == chosen:
                v1.add(even)
            elif truth[t]:
                v1.add(odd)
    P = Bipartition.from_v1(G.n, v1)
    require_valid(G, rec.output_pi, P, "partition_from_assignment")
    return P


def parse_dimacs(text: str) -> CnfFormula:
    """Read a DIMACS CNF whose clauses all have exactly three literals."""
    header = None
    tokens: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed problem line {line!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"malformed problem line {line!r}", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' line", lineno)
        for tok in line.split():
            try:
                tokens.append((int(tok), lineno))
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
    if header is None:
        raise ParseError("missing 'p cnf <vars> <clauses>' line")
    num_vars, num_clauses = header

    clauses, current = [], []
    for lit, lineno in tokens:
        if lit == 0:
            if len(current) != 3:
                raise ParseError(f"clause {current} has width {len(current)}; only 3-literal clauses are accepted", lineno)
            clauses.append(tuple(current))
            current = []
        elif abs(lit) > num_vars:
            raise ParseError(f"literal {lit} exceeds declared {num_vars} variables", lineno)
        else:
            current.append(lit)
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise ParseError(f"header declares {num_clauses} clauses but {len(clauses)} were given")
    return CnfFormula(num_vars, tuple(clauses))


def serialize_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    lines.extend(" ".join(map(str, c)) + " 0" for c in phi.clauses)
    return "\n".join(lines) + "\n"


def read_dimacs(path: str | Path) -> CnfFormula:
    return parse_dimacs(Path(path).read_text())
