"""Seeded oracle-equivalence suites.

Each suite draws random instances, runs a fast method and the brute-force
oracle on them, and records every disagreement as a readable failure line.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import islice, product
from typing import Callable

from .classify import NP_TABLE, OPEN_K5, Status, classify, replay
from .core import (
    Bipartition,
    Hypergraph,
    PiVector,
    check_partition,
    complement_hypergraph,
    complement_pi,
    is_clique,
    is_independent,
    reverse_pi,
)
from .errors import ApplicabilityError, UsageError
from .generators import random_hypergraph
from .reductions import (
    CnfFormula,
    brute_force_sat,
    count_exact_covers,
    doubling,
    partition_from_assignment,
    prepend_zero_reduction,
    pull_back,
    pull_back_sat,
    push_forward,
    reduce_3sat,
    sigma_lift,
    to_exact_cover,
)
from .solvers import (
    Orientation,
    backtrack_first,
    backtrack_solutions,
    brute_force,
    brute_force_count,
    enumerate_sparse_dense,
    solve_alternating,
    solve_mixed,
)

# blow-up outputs admit many anchor placements; pull back only this many per instance
PULL_BACK_CAP = 25
ORACLE_N = 20


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    stats: Counter = field(default_factory=Counter)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name}: {self.cases} cases, {len(self.failures)} failures, {self.elapsed:.2f}s"


def _graph(rng: random.Random, n: int, k: int) -> Hypergraph:
    return random_hypergraph(n, k, rng.random(), seed=rng.randrange(2**32))


def _decide(G: Hypergraph, pi: PiVector) -> Bipartition | None:
    if G.n <= ORACLE_N:
        return brute_force(G, pi, mode="first", max_n=ORACLE_N)
    return backtrack_first(G, pi)


def _desc(G: Hypergraph, pi: PiVector | None = None) -> str:
    head = f"n={G.n} k={G.k} edges={G.sorted_edges()}"
    return head if pi is None else f"{head} pi={pi}"


def run_sparse_dense(seed: int = 0, count: int = 200, max_n: int = 10, ks=(2, 3, 4)) -> SuiteReport:
    rep = SuiteReport("sparse-dense")
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.choice(ks)
        n = rng.randint(0, max_n)
        G = _graph(rng, n, k)
        for orient in Orientation:
            got = enumerate_sparse_dense(G, orient)
            expect = []
            for bits in product((False, True), repeat=n):
                P = Bipartition(bits)
                indep, cliq = (P.v1, P.v2) if orient is Orientation.INDEPENDENT_FIRST else (P.v2, P.v1)
                if is_independent(G, indep) and is_clique(G, cliq):
                    expect.append(P)
            expect.sort(key=Bipartition.sort_key)
            if got != expect:
                rep.fail(f"{orient.name}: {len(got)} found, oracle {len(expect)}; {_desc(G)}")
            bound = max(n ** (2 * (k - 1)), 2 ** (2 * k))
            if len(got) > bound:
                rep.fail(f"{orient.name}: {len(got)} partitions exceed bound {bound}; {_desc(G)}")
            rep.stats["max_count"] = max(rep.stats["max_count"], len(got))
        rep.cases += 1
    return rep


def _mixed_pi(rng: random.Random, k: int) -> PiVector:
    while True:
        pi = PiVector("".join(rng.choice("01*") for _ in range(k + 1)))
        if pi.has_both_zero_and_one:
            return pi


def run_mixed(seed: int = 0, count: int = 200, max_n: int = 9, ks=(3, 4)) -> SuiteReport:
    rep = SuiteReport("mixed")
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.choice(ks)
        n = rng.randint(2, max_n)
        G, pi = _graph(rng, n, k), _mixed_pi(rng, k)
        got = solve_mixed(G, pi)
        expect = brute_force(G, pi)
        if got != expect:
            rep.fail(f"{len(got)} found, oracle {len(expect)}; {_desc(G, pi)}")
        if len(got) > n ** (3 * k):
            rep.fail(f"{len(got)} partitions exceed n^3k = {n ** (3 * k)}; {_desc(G, pi)}")
        rep.stats["max_count"] = max(rep.stats["max_count"], len(got))
        rep.cases += 1
    return rep


def _alternating(k: int) -> PiVector:
    return PiVector("".join("0*"[i % 2] for i in range(k + 1)))


def run_alternating(seed: int = 0, count: int = 200, max_n: int = 12, ks=(3, 4)) -> SuiteReport:
    rep = SuiteReport("alternating")
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.choice(ks)
        n = rng.randint(0, max_n)
        # sparse graphs keep a healthy share of yes-instances
        G = random_hypergraph(n, k, rng.random() * 0.3, seed=rng.randrange(2**32))
        pi = _alternating(k)
        got = solve_alternating(G, pi)
        expect = brute_force(G, pi, mode="first")
        if (got is None) != (expect is None):
            rep.fail(f"solver says {got is not None}, oracle {expect is not None}; {_desc(G, pi)}")
        elif got is not None and check_partition(G, pi, got) is not None:
            rep.fail(f"returned {got} is invalid; {_desc(G, pi)}")
        rep.stats["yes" if expect is not None else "no"] += 1
        rep.cases += 1
    return rep


def random_cnf(rng: random.Random, max_vars: int = 4, max_clauses: int = 6) -> CnfFormula:
    nv = rng.randint(1, max_vars)
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        clauses.append(tuple(rng.choice((1, -1)) * rng.randint(1, nv) for _ in range(3)))
    return CnfFormula(nv, tuple(clauses))


def run_sat(seed: int = 0, count: int = 100, max_n: int = 4, max_clauses: int = 6) -> SuiteReport:
    rep = SuiteReport("sat")
    rng = random.Random(seed)
    for _ in range(count):
        phi = random_cnf(rng, max_n, max_clauses)
        rec = reduce_3sat(phi)
        truth = brute_force_sat(phi)
        P = backtrack_first(rec.output, rec.output_pi)
        if (truth is None) != (P is None):
            rep.fail(f"satisfiable={truth is not None} but partitionable={P is not None}; {phi}")
        elif P is not None:
            assignment = pull_back_sat(rec, P)
            if not phi.satisfied_by(assignment):
                rep.fail(f"pull-back {assignment} falsifies {phi}")
            try:
                partition_from_assignment(rec, truth)
            except ApplicabilityError as exc:
                rep.fail(f"push-forward of {truth}: {exc}; {phi}")
        rep.stats["sat" if truth is not None else "unsat"] += 1
        rep.cases += 1
    return rep


_K3_ONE_FREE = [PiVector("".join(p)) for p in product("0*", repeat=4)]


def _applicable(build: Callable, pis) -> list[PiVector]:
    probe = Hypergraph(3, 3)
    out = []
    for pi in pis:
        try:
            build(probe, pi)
        except ApplicabilityError:
            continue
        out.append(pi)
    return out


def _run_lift(name: str, build: Callable, pis: list[PiVector], seed: int, count: int, max_n: int, cap) -> SuiteReport:
    rep = SuiteReport(name)
    rng = random.Random(seed)
    # one pass over every pattern, then patterns with 0 at both ends, which admit no-instances
    hard = [pi for pi in pis if not pi.is_trivial] or pis
    for t in range(count):
        pi = pis[t] if t < len(pis) else rng.choice(hard)
        G = _graph(rng, rng.randint(3, max(3, max_n)), 3)
        rec = build(G, pi)
        before = brute_force(G, pi, mode="first")
        after = _decide(rec.output, rec.output_pi)
        if (before is None) != (after is None):
            rep.fail(f"input {before is not None}, output {after is not None}; {_desc(G, pi)}")
            continue
        if before is not None:
            try:
                push_forward(rec, before)
            except ApplicabilityError as exc:
                rep.fail(f"push-forward: {exc}; {_desc(G, pi)}")
        for P in islice(backtrack_solutions(rec.output, rec.output_pi), cap):
            try:
                pull_back(rec, P)
            except ApplicabilityError as exc:
                rep.fail(f"pull-back of {P}: {exc}; {_desc(G, pi)}")
                break
            rep.stats["pulled_back"] += 1
        rep.stats["yes" if before is not None else "no"] += 1
        if "branch" in rec.params:
            rep.stats[f"branch {rec.params['branch']}"] += 1
        rep.cases += 1
    return rep


def run_sigma(seed: int = 0, count: int = 50, max_n: int = 5) -> SuiteReport:
    return _run_lift("sigma", sigma_lift, _applicable(sigma_lift, _K3_ONE_FREE), seed, count, max_n, None)


def run_double(seed: int = 0, count: int = 50, max_n: int = 5) -> SuiteReport:
    return _run_lift("double", doubling, _applicable(doubling, _K3_ONE_FREE), seed, count, max_n, PULL_BACK_CAP)


def run_prepend0(seed: int = 0, count: int = 50, max_n: int = 5) -> SuiteReport:
    pis = _applicable(prepend_zero_reduction, _K3_ONE_FREE)
    rep = _run_lift("prepend0", prepend_zero_reduction, pis, seed, count, max_n, None)
    if count >= len(pis) and not (rep.stats["branch A"] and rep.stats["branch B"]):
        rep.fail("cases did not exercise both constructions")
    return rep


def symmetry_orbit(pi: PiVector) -> set[str]:
    orbit = {pi}
    for f in (complement_pi, reverse_pi):
        orbit |= {f(q) for q in orbit}
    return {q.entries for q in orbit}


def expected_status(pi: PiVector) -> Status:
    """Verdict read straight off the dichotomy tables, closed under both symmetries."""
    if pi.k not in NP_TABLE:
        raise UsageError(f"no table for k={pi.k}")
    for entries in NP_TABLE[pi.k]:
        if pi.entries in symmetry_orbit(PiVector(entries)):
            return Status.NP_COMPLETE
    if pi.k == 5 and any(pi.entries in symmetry_orbit(PiVector(e)) for e in OPEN_K5):
        return Status.OPEN
    return Status.POLYNOMIAL


def run_tables(seed: int = 0, count: int = 0, max_n: int = 0, ks=(3, 4, 5)) -> SuiteReport:
    """Every vector of length 4, 5 and 6; ``seed``, ``count`` and ``max_n`` are unused."""
    rep = SuiteReport("tables")
    for k in ks:
        for entries in product("01*", repeat=k + 1):
            pi = PiVector("".join(entries))
            verdict = classify(pi)
            expect = expected_status(pi)
            rep.stats[f"k{k}:{verdict.status.value}"] += 1
            if verdict.status is not expect:
                rep.fail(f"{pi}: classified {verdict.status.value}, table says {expect.value}")
            if verdict.status is Status.NP_COMPLETE:
                try:
                    end = replay(verdict.derivation)
                except ApplicabilityError as exc:
                    rep.fail(f"{pi}: derivation does not replay ({exc})")
                else:
                    if end != pi:
                        rep.fail(f"{pi}: derivation ends at {end}")
            rep.cases += 1
    return rep


def run_xc(seed: int = 0, count: int = 50, max_n: int = 9) -> SuiteReport:
    rep = SuiteReport("xc")
    rng = random.Random(seed)
    pi = PiVector("0*00")
    for _ in range(count):
        G = _graph(rng, rng.randint(0, max_n), 3)
        covers = count_exact_covers(to_exact_cover(G).output)
        parts = brute_force_count(G, pi)
        if covers != parts:
            rep.fail(f"{covers} exact covers, {parts} partitions; {_desc(G)}")
        rep.stats["max_count"] = max(rep.stats["max_count"], parts)
        rep.cases += 1
    return rep


def run_symmetry(seed: int = 0, count: int = 500, max_n: int = 8, ks=(1, 2, 3, 4)) -> SuiteReport:
    rep = SuiteReport("symmetry")
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.choice(ks)
        n = rng.randint(0, max_n)
        G = _graph(rng, n, k)
        pi = PiVector("".join(rng.choice("01*") for _ in range(k + 1)))
        P = Bipartition(tuple(rng.random() < 0.5 for _ in range(n)))
        ok = check_partition(G, pi, P) is None
        comp = check_partition(complement_hypergraph(G), complement_pi(pi), P) is None
        rev = check_partition(G, reverse_pi(pi), P.swapped()) is None
        if ok != comp:
            rep.fail(f"complement law breaks at P={P}; {_desc(G, pi)}")
        if ok != rev:
            rep.fail(f"reversal law breaks at P={P}; {_desc(G, pi)}")
        rep.stats["valid" if ok else "invalid"] += 1
        rep.cases += 1
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "sparse-dense": run_sparse_dense,
    "mixed": run_mixed,
    "alternating": run_alternating,
    "sat": run_sat,
    "sigma": run_sigma,
    "double": run_double,
    "prepend0": run_prepend0,
    "tables": run_tables,
    "xc": run_xc,
    "symmetry": run_symmetry,
}


def run_suite(name: str, seed: int = 0, count: int | None = None, max_n: int | None = None) -> SuiteReport:
    try:
        runner = SUITES[name]
    except KeyError:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    kwargs = {"seed": seed}
    if count is not None:
        kwargs["count"] = count
    if max_n is not None:
        kwargs["max_n"] = max_n
    start = time.perf_counter()
    rep = runner(**kwargs)
    rep.elapsed = time.perf_counter() - start
    return rep
