"""Classify, solve and reduce pi-partition problems on k-uniform hypergraphs."""

from .classify import ComplexityVerdict, Status, classify, normalize
from .core import (
    Bipartition,
    Hypergraph,
    PiVector,
    Violation,
    ViolationKind,
    check_partition,
    complement_hypergraph,
    complement_pi,
    induced,
    is_clique,
    is_independent,
    is_pi_partition,
    link,
    reverse_pi,
)
from .errors import ApplicabilityError, HyperpartError, ParseError, ResourceError, UsageError
from .generators import complete, cycle, empty, generate, random_hypergraph
from .io import parse_hypergraph, read_hypergraph, serialize_hypergraph, write_hypergraph
from .solvers import brute_force, solve, solve_all

__all__ = [
    "ApplicabilityError", "Bipartition", "ComplexityVerdict", "HyperpartError", "Hypergraph",
    "ParseError", "PiVector", "ResourceError", "Status", "UsageError", "Violation", "ViolationKind",
    "brute_force", "check_partition", "classify", "complement_hypergraph", "complement_pi",
    "complete", "cycle", "empty", "generate", "induced", "is_clique", "is_independent",
    "is_pi_partition", "link", "normalize", "parse_hypergraph", "random_hypergraph",
    "read_hypergraph", "reverse_pi", "serialize_hypergraph", "solve", "solve_all",
    "write_hypergraph",
]
