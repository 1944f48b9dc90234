import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperpart import (
    ApplicabilityError,
    Bipartition,
    Hypergraph,
    PiVector,
    ResourceError,
    check_partition,
    complete,
    cycle,
    empty,
    induced,
    is_clique,
    is_independent,
    random_hypergraph,
)
from hyperpart.solvers import (
    LinearSystem,
    Orientation,
    backtrack_first,
    backtrack_solutions,
    brute_force,
    brute_force_count,
    enumerate_pi_01,
    enumerate_sparse_dense,
    solve,
    solve_all,
    solve_alternating,
    solve_gf2,
    solve_mixed,
    sparse_dense_levels,
)

H = Hypergraph(4, 3, [(0, 1, 3), (0, 2, 3), (1, 2, 3)])
EDGE = Hypergraph(3, 3, [(0, 1, 2)])


def sorted_parts(parts):
    return sorted(parts, key=Bipartition.sort_key)


class TestBruteForce:
    def test_gadget_unique(self):
        assert [str(P) for P in brute_force(H, PiVector("0*00"))] == ["2221"]

    def test_cycle_three_partitions(self):
        got = {frozenset(P.v1) for P in brute_force(cycle(6, 3), PiVector("0*00"))}
        assert got == {frozenset({0, 3}), frozenset({1, 4}), frozenset({2, 5})}

    def test_complete_has_none(self):
        assert brute_force(complete(4, 3), PiVector("0*00")) == []
        assert brute_force(complete(4, 3), PiVector("0*00"), mode="first") is None

    def test_first_is_lexicographically_least(self):
        G, pi = cycle(6, 3), PiVector("0**0")
        everything = brute_force(G, pi)
        assert everything == sorted_parts(everything)
        assert brute_force(G, pi, mode="first") == everything[0]

    def test_cap(self):
        with pytest.raises(ResourceError):
            brute_force(empty(25, 3), PiVector("0*00"))
        assert brute_force_count(empty(5, 3), PiVector("0*00"), max_n=5) == 32

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_fewer_vertices_than_k(self, n):
        assert len(brute_force(empty(n, 3), PiVector("1111"))) == 2**n


class TestSparseDense:
    def test_single_edge(self):
        got = enumerate_sparse_dense(EDGE)
        assert len(got) == 7
        assert Bipartition.all_v1(3) not in got

    @pytest.mark.parametrize("G", [complete(4, 3), empty(4, 3)])
    def test_eleven(self, G):
        assert len(enumerate_sparse_dense(G)) == 11

    @pytest.mark.parametrize("seed", range(30))
    @pytest.mark.parametrize("orientation", list(Orientation))
    def test_matches_definition(self, seed, orientation):
        rng = random.Random(seed)
        k = rng.choice((2, 3, 4))
        G = random_hypergraph(rng.randint(0, 8), k, rng.random(), seed=seed)
        expect = []
        for bits in product((False, True), repeat=G.n):
            P = Bipartition(bits)
            indep, cliq = (P.v1, P.v2) if orientation is Orientation.INDEPENDENT_FIRST else (P.v2, P.v1)
            if is_independent(G, indep) and is_clique(G, cliq):
                expect.append(P)
        assert enumerate_sparse_dense(G, orientation) == sorted_parts(expect)

    @pytest.mark.parametrize("seed", range(10))
    def test_prefix_states_are_hereditary(self, seed):
        G = random_hypergraph(8, 3, 0.5, seed=seed)
        for i, states in enumerate(sparse_dense_levels(G)):
            sub = induced(G, range(i))
            assert len(states) <= max(i ** 4, 2**6)
            for indep, cliq in states:
                assert is_independent(sub, indep) and is_clique(sub, cliq)


class TestMixed:
    def test_pi_01_complete(self):
        got = enumerate_pi_01(complete(4, 3), PiVector("0**1"))
        # pi_0 = 0 forbids triples inside V2, pi_3 = 1 is free on a complete graph
        assert len(got) == 11
        assert all(len(P.v2) <= 2 for P in got)

    @pytest.mark.parametrize("G, pi", [(EDGE, "0111"), (empty(3, 3), "0**1"), (H, "0**1")])
    def test_pi_01_matches_oracle(self, G, pi):
        assert enumerate_pi_01(G, PiVector(pi)) == brute_force(G, PiVector(pi))

    def test_empty_3_3(self):
        assert len(enumerate_pi_01(empty(3, 3), PiVector("0**1"))) == 7

    def test_pi_01_precondition(self):
        with pytest.raises(ApplicabilityError):
            enumerate_pi_01(H, PiVector("1**0"))

    @pytest.mark.parametrize("G", [complete(4, 3), empty(4, 3)])
    def test_zero_one_one_one(self, G):
        assert solve_mixed(G, PiVector("0111")) == brute_force(G, PiVector("0111"))

    def test_equals_pi_01(self):
        assert solve_mixed(H, PiVector("0**1")) == enumerate_pi_01(H, PiVector("0**1"))

    def test_precondition(self):
        with pytest.raises(ApplicabilityError):
            solve_mixed(H, PiVector("0*00"))

    @settings(max_examples=120, deadline=None)
    @given(st.integers(2, 4), st.integers(2, 8), st.floats(0, 1), st.integers(0, 2**32), st.data())
    def test_matches_oracle(self, k, n, p, seed, data):
        G = random_hypergraph(n, k, p, seed=seed)
        pi = PiVector(data.draw(st.text("01*", min_size=k + 1, max_size=k + 1).filter(lambda s: "0" in s and "1" in s)))
        got = solve_mixed(G, pi)
        assert got == brute_force(G, pi)
        assert len(got) <= n ** (3 * k)


class TestAlternating:
    def test_linear_system_rows(self):
        system = LinearSystem.from_hypergraph(Hypergraph(4, 3, [(0, 1, 2), (1, 2, 3)]))
        assert system.rhs == (1, 1)
        assert solve_gf2(system) is not None

    def test_single_edge_odd(self):
        P = solve_alternating(EDGE, PiVector("0*0*"))
        assert len(P.v1) % 2 == 1

    def test_two_edges_force_equal_ends(self):
        G = Hypergraph(4, 3, [(0, 1, 2), (1, 2, 3)])
        P = solve_alternating(G, PiVector("0*0*"))
        assert P.in_v1[0] == P.in_v1[3]
        assert check_partition(G, PiVector("0*0*"), P) is None

    def test_empty_gives_all_v2(self):
        assert solve_alternating(empty(3, 4), PiVector("0*0*0")) == Bipartition.all_v2(3)

    def test_unsatisfiable(self):
        # each vertex of K5 lies in four of the five equations, so their sum reads 0 = 1
        assert solve_alternating(complete(5, 4), PiVector("0*0*0")) is None
        assert brute_force(complete(5, 4), PiVector("0*0*0")) == []

    def test_precondition(self):
        with pytest.raises(ApplicabilityError):
            solve_alternating(H, PiVector("0*00"))

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_oracle(self, seed):
        rng = random.Random(seed)
        k = rng.choice((3, 4))
        G = random_hypergraph(rng.randint(0, 11), k, rng.random() * 0.4, seed=seed)
        pi = PiVector("".join("0*"[i % 2] for i in range(k + 1)))
        got = solve_alternating(G, pi)
        assert (got is None) == (brute_force(G, pi, mode="first") is None)
        if got is not None:
            assert check_partition(G, pi, got) is None


class TestBacktracking:
    @pytest.mark.parametrize("seed", range(40))
    def test_enumeration_matches_oracle(self, seed):
        rng = random.Random(seed)
        k = rng.choice((2, 3, 4))
        G = random_hypergraph(rng.randint(0, 9), k, rng.random(), seed=seed)
        pi = PiVector("".join(rng.choice("01*") for _ in range(k + 1)))
        assert list(backtrack_solutions(G, pi)) == brute_force(G, pi)
        assert backtrack_first(G, pi) == brute_force(G, pi, mode="first")


class TestDispatch:
    @pytest.mark.parametrize("G", [H, complete(5, 3), empty(2, 3)])
    def test_trivial(self, G):
        answer = solve(G, PiVector("*000"))
        assert answer.method == "trivial"
        assert answer.partition == Bipartition.all_v2(G.n)

    def test_gadget_via_fallback(self):
        answer = solve(H, PiVector("0*00"))
        assert answer.method == "fallback"
        assert str(answer.partition) == "2221"

    def test_cycle_two_colouring(self):
        answer = solve(cycle(6, 3), PiVector("0**0"))
        assert answer.method == "fallback"
        assert check_partition(cycle(6, 3), PiVector("0**0"), answer.partition) is None

    @pytest.mark.parametrize(
        "pi, method",
        [("00000", "all-zero"), ("11111", "all-one"), ("0*0*0", "alternating"), ("1*1*1", "alternating"),
         ("01*11", "mixed"), ("0**00", "fallback"), ("*0000", "trivial")],
    )
    def test_routing(self, pi, method):
        G = random_hypergraph(7, 4, 0.3, seed=5)
        answer = solve(G, PiVector(pi))
        assert answer.method == method
        assert answer.satisfiable == (brute_force(G, PiVector(pi), mode="first") is not None)

    def test_all_zero_needs_edgeless(self):
        assert not solve(H, PiVector("0000")).satisfiable
        assert solve(empty(4, 3), PiVector("0000")).partition == Bipartition.all_v2(4)

    @pytest.mark.parametrize("seed", range(60))
    def test_yes_no_matches_oracle(self, seed):
        rng = random.Random(seed)
        k = rng.choice((2, 3, 4))
        G = random_hypergraph(rng.randint(0, 9), k, rng.random(), seed=seed)
        pi = PiVector("".join(rng.choice("01*") for _ in range(k + 1)))
        answer = solve(G, pi)
        assert answer.satisfiable == (brute_force(G, pi, mode="first") is not None)
        method, solutions = solve_all(G, pi)
        assert sorted_parts(solutions) == brute_force(G, pi)
