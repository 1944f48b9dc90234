"""Reduction output plus the bookkeeping needed to map solutions back."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

from ..core import Bipartition, Hypergraph, PiVector, check_partition
from ..errors import ApplicabilityError


class Role(NamedTuple):
    """Provenance tag of an output vertex: ``orig`` for an input vertex, else a gadget name."""

    name: str
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.name}:{','.join(map(str, self.indices))}"


def original(v: int) -> Role:
    return Role("orig", (v,))


@dataclass(frozen=True)
class ReductionRecord:
    kind: str
    source: Any
    source_pi: PiVector | None
    output: Any
    output_pi: PiVector | None
    roles: tuple[Role, ...]
    params: dict = field(default_factory=dict)

    def vertices_with(self, name: str) -> dict[tuple[int, ...], int]:
        return {r.indices: i for i, r in enumerate(self.roles) if r.name == name}

    def original_vertices(self) -> list[int]:
        """Output index of each input vertex, in input order."""
        tagged = self.vertices_with("orig")
        return [tagged[(v,)] for v in range(len(tagged))]

    def map_lines(self) -> str:
        head = [f"kind {self.kind}"]
        if self.source_pi is not None or self.output_pi is not None:
            head.append(f"pi {self.source_pi or '-'} -> {self.output_pi or '-'}")
        for key in sorted(self.params):
            if key.startswith("_"):
                continue
            value = self.params[key]
            if isinstance(value, (tuple, list)):
                value = ",".join(map(str, value))
            elif isinstance(value, dict):
                value = ",".join(f"{a}={int(b)}" for a, b in sorted(value.items()))
            head.append(f"param {key} {value}")
        body = [f"v {i} {r}" for i, r in enumerate(self.roles)]
        return "\n".join(head + body) + "\n"


def require_valid(G: Hypergraph, pi: PiVector, P: Bipartition, what: str) -> None:
    violation = check_partition(G, pi, P)
    if violation is not None:
        raise ApplicabilityError(f"{what}: partition is not a {pi}-partition (violation {violation})")
