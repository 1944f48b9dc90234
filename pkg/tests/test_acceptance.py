"""Acceptance criteria, one test per criterion.

Each check returns ``(ok, detail)`` and is timed against its budget. Run
``python tests/test_acceptance.py`` for the bare PASS/FAIL lines; under
pytest the same lines appear in the terminal summary.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import product

import pytest

from hyperpart import Bipartition, Hypergraph, PiVector, Status, cycle, is_clique, is_independent, random_hypergraph
from hyperpart.classify import classify
from hyperpart.solvers import Orientation, brute_force, enumerate_sparse_dense
from hyperpart.suites import (
    run_alternating,
    run_double,
    run_mixed,
    run_prepend0,
    run_sat,
    run_sigma,
    run_symmetry,
    run_tables,
    run_xc,
    symmetry_orbit,
)

SEED = 20261016
RESULTS: dict[int, str] = {}

H = Hypergraph(4, 3, [(0, 1, 3), (0, 2, 3), (1, 2, 3)])
PI = PiVector("0*00")
K5_EXCLUDED = ("0*00*0", "0**0*0", "0*0**0", "0*0*00", "00*0*0")


def gadget_uniqueness():
    found = brute_force(H, PI)
    return [P.v1 for P in found] == [{3}], f"partitions {[str(P) for P in found]}"


def cycle_count():
    found = {frozenset(P.v1) for P in brute_force(cycle(6, 3), PI)}
    expect = {frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})}
    return found == expect, f"V1 sets {sorted(map(sorted, found))}"


def dichotomy_tables():
    rep = run_tables(seed=SEED)
    counts = rep.stats
    k5_open = {pi.entries for pi in map(PiVector, map("".join, product("01*", repeat=6))) if classify(pi).status is Status.OPEN}
    orbit = set().union(*(symmetry_orbit(PiVector(e)) for e in K5_EXCLUDED))
    ok = (
        rep.passed
        and counts["k3:NPComplete"] == 6
        and counts["k3:Polynomial"] == 75
        and counts["k4:NPComplete"] == 12
        and counts["k4:Polynomial"] == 231
        and counts["k4:Open"] == counts["k3:Open"] == 0
        and k5_open == orbit
    )
    detail = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    return ok, f"{detail}; open orbit size {len(orbit)}; {len(rep.failures)} failures"


def sparse_dense_bound():
    rng = random.Random(SEED)
    worst = 0
    for _ in range(200):
        n = rng.randint(0, 10)
        G = random_hypergraph(n, 3, rng.random(), seed=rng.randrange(2**32))
        got = enumerate_sparse_dense(G, Orientation.INDEPENDENT_FIRST)
        sides = (Bipartition(bits) for bits in product((False, True), repeat=n))
        oracle = sum(1 for P in sides if is_independent(G, P.v1) and is_clique(G, P.v2))
        if len(got) != oracle:
            return False, f"n={n}: enumerated {len(got)}, oracle {oracle}"
        if len(got) > n**4 + 2**6:
            return False, f"n={n}: {len(got)} exceeds n^4 + 2^6"
        worst = max(worst, len(got))
    return True, f"200 graphs, largest family {worst}"


def _suite(rep):
    return rep.passed, f"{rep.cases} cases, stats {dict(rep.stats)}; failures {rep.failures[:3]}"


def mixed_solver():
    return _suite(run_mixed(seed=SEED, count=200, max_n=9, ks=(3, 4)))


def alternating_solver():
    return _suite(run_alternating(seed=SEED, count=200, max_n=12, ks=(3, 4)))


def sat_equivalence():
    return _suite(run_sat(seed=SEED, count=100, max_n=4, max_clauses=6))


def reduction_chain():
    reports = [run(seed=SEED, count=50, max_n=5) for run in (run_sigma, run_double, run_prepend0)]
    ok = all(r.passed for r in reports) and all(r.cases == 50 for r in reports)
    ok = ok and reports[2].stats["branch A"] > 0 and reports[2].stats["branch B"] > 0
    detail = "; ".join(f"{r.name}: {dict(r.stats)} failures {r.failures[:2]}" for r in reports)
    return ok, detail


def exact_cover():
    return _suite(run_xc(seed=SEED, count=50, max_n=9))


def symmetry_laws():
    return _suite(run_symmetry(seed=SEED, count=500, max_n=8))


CRITERIA = [
    (1, "gadget uniqueness", gadget_uniqueness, 1.0),
    (2, "cycle count", cycle_count, 1.0),
    (3, "dichotomy tables", dichotomy_tables, 5.0),
    (4, "sparse-dense bound", sparse_dense_bound, 30.0),
    (5, "mixed-pattern solver", mixed_solver, 60.0),
    (6, "alternating solver", alternating_solver, 30.0),
    (7, "SAT reduction equivalence", sat_equivalence, 120.0),
    (8, "reduction-chain equivalence", reduction_chain, 120.0),
    (9, "exact-cover correspondence", exact_cover, 30.0),
    (10, "symmetry laws", symmetry_laws, 10.0),
]


def evaluate(number, name, check, budget):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < budget
    line = f"{'PASS' if ok else 'FAIL'} criterion {number} ({name}): {elapsed:.2f}s of {budget:.0f}s; {detail}"
    RESULTS[number] = line
    return ok, line


@pytest.mark.acceptance
@pytest.mark.parametrize("number, name, check, budget", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(number, name, check, budget):
    ok, line = evaluate(number, name, check, budget)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
