from dataclasses import dataclass
from enum import Enum

import numpy as np

from groups.utils import inverse, regular_rep
from tensors.utils import embed, kron


@dataclass(frozen=True, eq=False)
class FrameChange:
    """
    Unitary change of perspective from `old_frame` to `new_frame`:

        U = SWAP(old, new) . sum_g |g><g|_new (x) V_g on every target

    V_g is the right-regular U_R(g) (U_R(g^-1) for an inverted change).
    Targets are the registers, plus the old frame itself when the change
    is dressed.
    """
    layout: object
    group: object
    old_frame: str
    new_frame: str
    registers: tuple
    dress_old_frame: bool
    inverted: bool
    swap: tuple
    controlled_blocks: tuple
    dense: np.ndarray

    @property
    def targets(self):
        if self.dress_old_frame:
            return tuple(label for label in self.layout.labels if label != self.new_frame)
        return self.registers

    def site_rep(self, g):
        return regular_rep(self.group, inverse(self.group, g) if self.inverted else g)

    def block_rep(self, g, support):
        return kron(*[self.site_rep(g) for _ in support])

    def inverse(self):
        from frames.transform import assemble_frame_change

        return assemble_frame_change(
            self.layout,
            self.group,
            self.new_frame,
            self.old_frame,
            dress_old_frame=self.dress_old_frame,
            inverted=not self.inverted,
        )

    def __str__(self):
        return f"U({self.old_frame}->{self.new_frame})"


@dataclass(frozen=True, eq=False)
class ControlledOperator:
    layout: object
    group: object
    control: str
    target: tuple
    spectators: tuple
    blocks: tuple

    def local_dense(self):
        """sum_g |g><g| (x) block(g) on (control, *target)."""
        d = self.group.order
        total = 0
        for g, block in self.blocks:
            projector = np.zeros((d, d), dtype=complex)
            projector[self.group.index(g), self.group.index(g)] = 1.0
            total = total + kron(projector, block)
        return total

    def dense(self):
        return embed(self.layout, self.local_dense(), (self.control,) + self.target)

    @property
    def support(self):
        return (self.control,) + self.target

    def distinct_blocks(self, tol=1e-10):
        distinct = []
        for _, block in self.blocks:
            if not any(np.linalg.norm(block - other) <= tol for other in distinct):
                distinct.append(block)
        return len(distinct)


class GateKind(Enum):
    FRAME_ROBUST = "FrameRobust"
    PHASE_SECTOR = "PhaseSector"
    ENTANGLING = "Entangling"


@dataclass(frozen=True)
class GateClass:
    kind: GateKind
    character: object = None

    @property
    def is_robust(self):
        return self.kind is GateKind.FRAME_ROBUST

    @property
    def is_phase_sector(self):
        return self.kind is GateKind.PHASE_SECTOR

    @property
    def is_entangling(self):
        return self.kind is GateKind.ENTANGLING

    def __str__(self):
        if self.is_phase_sector:
            return f"{self.kind.value}({self.character})"
        return self.kind.value
