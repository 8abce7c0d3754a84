import math

from dataclasses import dataclass, field

PURITY = "purity"
BLOCH = "bloch"


@dataclass(frozen=True)
class BlochVector:
    r_x: float
    r_y: float
    r_z: float

    @property
    def norm(self):
        return math.sqrt(self.r_x ** 2 + self.r_y ** 2 + self.r_z ** 2)


@dataclass(frozen=True)
class SchmidtDecomposition:
    coefficients: tuple
    left: object
    right: object

    @property
    def rank(self):
        return sum(1 for c in self.coefficients if c > 1e-12)


@dataclass(frozen=True)
class Complementarity:
    C2: float
    D2: float
    P2: float
    D2_total: float

    @property
    def residual(self):
        return abs(self.C2 + self.D2 + self.P2 - 1.0)

    @property
    def total_residual(self):
        return abs(self.C2 + self.D2_total - 1.0)


@dataclass(frozen=True)
class ResourceReport:
    """
    Entanglement of a pair and coherence of one of its members, as seen from one frame.

    `coherence_measure` says which coherence enters `sum_CD`: the Bloch
    off-diagonal D2 or the purity-based D2_purity.
    """
    frame: str
    pair: tuple
    local: str
    C2: float
    D2: float
    P2: float
    D2_purity: float
    coherence_measure: str = PURITY
    flags: tuple = field(default=())

    @property
    def coherence(self):
        return self.D2_purity if self.coherence_measure == PURITY else self.D2

    @property
    def sum_CD(self):
        return self.C2 + self.coherence

    @property
    def sum_CDP(self):
        return self.C2 + self.D2 + self.P2

    @property
    def measures_diverge(self):
        return abs(self.D2 - self.D2_purity) > 1e-6

    def as_csv_row(self):
        return [self.frame, f"{self.C2:.6f}", f"{self.D2:.6f}", f"{self.P2:.6f}", f"{self.D2_purity:.6f}",
                f"{self.sum_CD:.6f}"]

    CSV_HEADER = ["frame", "C2", "D2", "P2", "D2_purity", "sum"]
