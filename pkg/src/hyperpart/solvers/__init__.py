from .backtrack import backtrack_first, backtrack_solutions
from .brute import DEFAULT_MAX_N, brute_force, brute_force_count
from .dispatch import Answer, solve, solve_all
from .gf2 import LinearSystem, solve_alternating, solve_gf2
from .mixed import enumerate_pi_01, solve_mixed
from .sparse_dense import Orientation, enumerate_sparse_dense, sparse_dense_levels

__all__ = [
    "Answer",
    "DEFAULT_MAX_N",
    "LinearSystem",
    "Orientation",
    "backtrack_first",
    "backtrack_solutions",
    "brute_force",
    "brute_force_count",
    "enumerate_pi_01",
    "enumerate_sparse_dense",
    "solve",
    "solve_all",
    "solve_alternating",
    "solve_gf2",
    "solve_mixed",
    "sparse_dense_levels",
]
