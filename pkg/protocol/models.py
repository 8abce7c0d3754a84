import math
import re

from dataclasses import dataclass, field

import numpy as np

from protocol.exceptions import (
    InvalidBasisError,
    InvalidCountsError,
    InvalidNoiseError,
    NotPhysicalError,
)

PHYSICAL_BASIS = ("000", "011", "101", "110")
PAULI_LETTERS = "XYZ"
NORM_TOL = 1e-10


@dataclass(frozen=True)
class PhysicalState:
    """
    Amplitudes over the even-parity basis |000>, |011>, |101>, |110> of (A, B, C).
    """
    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self):
        norm = math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes))
        if abs(norm - 1.0) > NORM_TOL:
            raise NotPhysicalError(f"norm is {norm:.12f}, not 1")

    @property
    def amplitudes(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    def embed(self):
        psi = np.zeros(8, dtype=complex)
        for bits, amplitude in zip(PHYSICAL_BASIS, self.amplitudes):
            psi[int(bits, 2)] = amplitude
        return psi

    @classmethod
    def from_vector(cls, psi, tol=1e-9):
        psi = np.asarray(psi, dtype=complex).reshape(-1)
        if psi.shape != (8,):
            raise NotPhysicalError(f"expected an 8-dimensional state, got {psi.shape[0]}")
        odd = [index for index in range(8) if bin(index).count("1") % 2 == 1]
        leak = float(np.linalg.norm(psi[odd]))
        if leak > tol:
            raise NotPhysicalError(f"odd-parity weight {leak:.3e}")
        return cls(*(complex(psi[int(bits, 2)]) for bits in PHYSICAL_BASIS))


@dataclass(frozen=True, eq=False)
class FrameView:
    """What an observer in `frame` sees: conditional states of the rest and their mixture."""
    frame: str
    others: tuple
    conditionals: tuple
    reduced: np.ndarray

    @property
    def weights(self):
        return tuple(float(np.vdot(chi, chi).real) for chi in self.conditionals)


@dataclass(frozen=True)
class NoiseModel:
    p2q: float = 0.0
    p1q: float = 0.0
    ro: float = 0.0

    def __post_init__(self):
        for name in ("p2q", "p1q", "ro"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidNoiseError(f"{name}={value}", "probabilities must lie in [0, 1]")

    @property
    def is_noiseless(self):
        return self.p2q == 0 and self.p1q == 0 and self.ro == 0

    def gate_error(self, arity):
        return self.p1q if arity == 1 else self.p2q

    @classmethod
    def parse(cls, text):
        """Parse 'p2q=0.02,p1q=0.001,ro=0.01'; omitted entries are zero, 'none' is noiseless."""
        text = (text or "").strip()
        if text.lower() in ("", "none", "off"):
            return cls()
        values = {}
        for part in text.split(","):
            match = re.fullmatch(r"\s*(p2q|p1q|ro)\s*=\s*([^\s,]+)\s*", part)
            if match is None:
                raise InvalidNoiseError(text, f"cannot read {part!r}")
            try:
                values[match.group(1)] = float(match.group(2))
            except ValueError:
                raise InvalidNoiseError(text, f"{match.group(2)!r} is not a number")
        return cls(**values)

    def __str__(self):
        return f"p2q={self.p2q:g},p1q={self.p1q:g},ro={self.ro:g}"


NOISELESS = NoiseModel()


@dataclass(frozen=True)
class MeasurementRecord:
    """
    Outcome counts of one Pauli basis. Outcomes are bit strings with A first.

    `shots == 0` marks an exact record that carries Born probabilities instead of counts.
    """
    basis: str
    counts: dict
    shots: int
    probabilities: dict = None

    def __post_init__(self):
        if len(self.basis) != 3 or any(letter not in PAULI_LETTERS for letter in self.basis):
            raise InvalidBasisError(self.basis)
        if self.shots < 0:
            raise InvalidCountsError(self.basis, "shots must not be negative")
        if any(count < 0 for count in self.counts.values()):
            raise InvalidCountsError(self.basis, "counts must not be negative")
        if self.shots > 0 and sum(self.counts.values()) != self.shots:
            raise InvalidCountsError(self.basis, f"counts sum to {sum(self.counts.values())}, not {self.shots}")
        if any(len(outcome) != 3 or set(outcome) - {"0", "1"} for outcome in self.counts):
            raise InvalidCountsError(self.basis, "outcomes must be 3-bit strings")

    @property
    def is_exact(self):
        return self.shots == 0 and self.probabilities is not None

    def frequencies(self):
        if self.is_exact:
            return dict(self.probabilities)
        return {outcome: count / self.shots for outcome, count in self.counts.items()}


@dataclass(frozen=True, eq=False)
class TomographyResult:
    rho: np.ndarray
    linear: np.ndarray
    min_eigenvalue: float
    projected: bool
    support: tuple = ()


@dataclass(frozen=True, eq=False)
class ProtocolResult:
    frame_a: object
    frame_b: object
    invariant_delta: float
    shots: int
    seed: int
    noise: NoiseModel
    theta: float
    flags: tuple = ()
    states: dict = field(default_factory=dict)  # frame -> reconstructed (A, C) state

    @property
    def exact(self):
        return self.shots == 0

    @property
    def reports(self):
        return (self.frame_a, self.frame_b)


@dataclass(frozen=True)
class SweepRow:
    lam: float
    reports: tuple

    def report(self, frame):
        return next(report for report in self.reports if report.frame == frame)


@dataclass(frozen=True)
class RejectedPoint:
    lam: float
    reason: str


@dataclass(frozen=True)
class SweepResult:
    family: str
    rows: tuple
    rejected: tuple = ()
    monotonicity: dict = field(default_factory=dict)

    @property
    def max_residual(self):
        residuals = [abs(report.sum_CD - 1.0) for row in self.rows for report in row.reports]
        return max(residuals, default=0.0)

    CSV_HEADER = ["lambda", "frame", "C2", "D2", "P2", "D2_purity", "sum"]

    def csv_rows(self):
        for row in self.rows:
            for report in row.reports:
                yield [f"{row.lam:.6f}"] + report.as_csv_row()
