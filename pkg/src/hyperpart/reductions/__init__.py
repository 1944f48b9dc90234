"""Instance transformers with solution pull-back."""

from .exact_cover import (
    ExactCoverInstance,
    count_exact_covers,
    exact_covers,
    from_exact_cover,
    parse_exact_cover,
    read_exact_cover,
    serialize_exact_cover,
    to_exact_cover,
)
from .lifts import blowup, doubling, prepend_zero_reduction, pull_back, push_forward, sigma_lift
from .record import ReductionRecord, Role, original
from .sat import (
    SAT_PI,
    CnfFormula,
    Trivial,
    brute_force_sat,
    parse_dimacs,
    partition_from_assignment,
    preprocess_cnf,
    pull_back_sat,
    read_dimacs,
    reduce_3sat,
    reduce_sat,
    serialize_dimacs,
)

__all__ = [
    "SAT_PI", "CnfFormula", "ExactCoverInstance", "ReductionRecord", "Role", "Trivial",
    "blowup", "brute_force_sat", "count_exact_covers", "doubling", "exact_covers",
    "from_exact_cover", "original", "parse_dimacs", "parse_exact_cover",
    "partition_from_assignment", "prepend_zero_reduction", "preprocess_cnf", "pull_back",
    "pull_back_sat", "push_forward", "read_dimacs", "read_exact_cover", "reduce_3sat",
    "reduce_sat", "serialize_dimacs", "serialize_exact_cover", "sigma_lift", "to_exact_cover",
]
