import numpy as np
import structlog

from circuits.gates import H, parse_angle
from core.exceptions import QrfException
from protocol.exceptions import ConservationViolation, InvalidGridError, UnknownFamilyError
from protocol.models import PhysicalState, RejectedPoint, SweepResult, SweepRow
from protocol.z2 import LAYOUT, relational_frame_change
from resources.measures import resource_report
from resources.models import BLOCH
from tensors.utils import embed, pure_density

logger = structlog.getLogger(__name__)

# frame -> (pair monitored for entanglement, qubit monitored for coherence)
FRAME_CUTS = {
    "C": (("A", "B"), "B"),
    "A": (("B", "C"), "B"),
    "B": (("A", "C"), "A"),
}
P2_TOL = 1e-9
CONSERVATION_TOL = 1e-9


def parity_family(lam):
    """cos(lam/2)|000> + sin(lam/2)|110>."""
    return PhysicalState(np.cos(lam / 2), 0, 0, np.sin(lam / 2))


def _rotated(base):
    return embed(LAYOUT, H, ("B",)) @ base.embed()


FAMILIES = {
    "default": (parity_family, _rotated),
    "parity": (parity_family, lambda base: base.embed()),
}


def parse_grid(text):
    """'start:stop:count' with angles such as 'pi/2'; a single angle gives a one-point grid."""
    parts = str(text).split(":")
    try:
        if len(parts) == 1:
            return np.array([parse_angle(parts[0])])
        if len(parts) != 3:
            raise InvalidGridError(text, "expected start:stop:count")
        start, stop, count = parse_angle(parts[0]), parse_angle(parts[1]), int(parts[2])
    except ValueError as ex:
        raise InvalidGridError(text, str(ex))
    if count < 1:
        raise InvalidGridError(text, "count must be positive")
    return np.linspace(start, stop, count)


def frame_state(psi, frame):
    """The state as described from `frame`, starting from frame C."""
    if frame == "C":
        return psi
    return relational_frame_change("C", frame).dense @ psi


def _trend(values, tol=1e-12):
    steps = np.diff(values)
    if len(steps) == 0 or np.all(np.abs(steps) <= tol):
        return "constant"
    if np.all(steps >= -tol):
        return "nondecreasing"
    if np.all(steps <= tol):
        return "nonincreasing"
    return "non-monotone"


def monotonicity(rows):
    trends = {}
    for frame in FRAME_CUTS:
        reports = [row.report(frame) for row in rows]
        trends[frame] = {
            "C2": _trend([report.C2 for report in reports]),
            "D2": _trend([report.D2 for report in reports]),
        }
    return trends


def lambda_sweep(family="default", grid="0:pi/2:33"):
    """
    Evaluate C2 of the monitored pair and D2 of the monitored qubit in every frame along a state family.

    Points whose base state leaves the physical subspace or whose monitored
    qubit has P2 > 0 are rejected and reported; accepted points must satisfy
    C2 + D2 = 1.
    """
    if family not in FAMILIES:
        raise UnknownFamilyError(family, sorted(FAMILIES))
    base_of, state_of = FAMILIES[family]
    lambdas = parse_grid(grid) if isinstance(grid, str) else np.asarray(grid, dtype=float)

    rows, rejected = [], []
    for lam in lambdas:
        try:
            psi = state_of(base_of(float(lam)))
        except QrfException as ex:
            rejected.append(RejectedPoint(float(lam), ex.detail))
            continue
        reports = []
        for frame, (pair, local) in FRAME_CUTS.items():
            rho = pure_density(frame_state(psi, frame))
            reports.append(resource_report(LAYOUT, rho, pair, local, frame, coherence_measure=BLOCH))
        unpredictable = [report for report in reports if report.P2 > P2_TOL]
        if unpredictable:
            reason = ", ".join(f"P2={report.P2:.3e} on {report.local} in frame {report.frame}"
                               for report in unpredictable)
            rejected.append(RejectedPoint(float(lam), reason))
            continue
        for report in reports:
            residual = abs(report.C2 + report.D2 - 1.0)
            if residual > CONSERVATION_TOL:
                raise ConservationViolation(report.frame, f"lambda={lam:.6f}", residual)
        rows.append(SweepRow(float(lam), tuple(reports)))

    if rejected:
        logger.warning("Rejected sweep points", family=family, count=len(rejected))
    logger.info("Lambda sweep", family=family, points=len(rows), rejected=len(rejected))
    return SweepResult(family=family, rows=tuple(rows), rejected=tuple(rejected), monotonicity=monotonicity(rows))
