from dataclasses import dataclass, field

import numpy as np

from circuits.exceptions import GateSupportError
from tensors.utils import as_unitary

NATIVE = "native"
COMPILED = "compiled"


@dataclass(frozen=True)
class GateOrigin:
    kind: str = NATIVE
    frame: str = None
    source: str = None
    source_index: int = None

    @property
    def is_compiled(self):
        return self.kind == COMPILED


@dataclass(frozen=True, eq=False)
class Gate:
    name: str
    support: tuple
    matrix: np.ndarray
    origin: GateOrigin = field(default_factory=GateOrigin)

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(self.support))
        object.__setattr__(self, "matrix", as_unitary(self.matrix, name=f"gate {self.name}"))
        if len(self.support) == 0:
            raise GateSupportError(self.name, self.support, "a gate needs at least one label")
        if len(set(self.support)) != len(self.support):
            raise GateSupportError(self.name, self.support, "support labels must be distinct")

    def __str__(self):
        return f"{self.name}[{','.join(self.support)}]"


@dataclass(frozen=True, eq=False)
class Circuit:
    """Gates in application order: gates[0] acts first."""
    layout: object
    gates: tuple
    frame: str

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        self.layout.position(self.frame)
        for gate in self.gates:
            for label in gate.support:
                if label not in self.layout.labels:
                    raise GateSupportError(gate.name, gate.support, f"label {label!r} is not in the layout")
            expected = self.layout.dim_of(gate.support)
            if gate.matrix.shape != (expected, expected):
                raise GateSupportError(gate.name, gate.support, f"matrix must be {expected}x{expected}")

    def __len__(self):
        return len(self.gates)

    def __str__(self):
        return " -> ".join(str(gate) for gate in self.gates) or "(empty)"


@dataclass(frozen=True)
class ComplexityReport:
    old_frame: str
    new_frame: str
    n_ent_old: int
    n_ent_new: int
    n_generic_locals: int
    generic_sources: tuple = ()

    @property
    def bound(self):
        return self.n_ent_old + self.n_generic_locals

    @property
    def saturated(self):
        return self.n_ent_new == self.bound

    @property
    def n_ent(self):
        return {self.old_frame: self.n_ent_old, self.new_frame: self.n_ent_new}
