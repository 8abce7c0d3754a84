import numpy as np
import structlog
from django.conf import settings

from circuits.compiler import circuit_global_unitary
from circuits.gates import ry
from circuits.library import builtin
from circuits.models import Circuit, Gate
from protocol.exceptions import ConservationViolation, PreconditionError, ReconstructionError
from protocol.models import NOISELESS, ProtocolResult
from protocol.simulator import DensityMatrixSimulator
from protocol.tomography import measure_all, tomography_reconstruct
from protocol.z2 import LAYOUT, P1
from resources.measures import resource_report
from resources.models import PURITY
from tensors.utils import as_state, basis_state, embed

logger = structlog.getLogger(__name__)

PAIR = ("A", "C")
LOCAL = "C"
CONSERVATION_TOL = 1e-9


def preparation_circuit(theta=None):
    """X_C H_B from the vacuum; with `theta` the B rotation is RY(theta) instead of H."""
    first = builtin("H", ["B"]) if theta is None else Gate(f"RY({theta:.6g})", ("B",), ry(theta))
    return Circuit(LAYOUT, (first, builtin("X", ["C"])), "A")


def lab_state(theta=None):
    """|0>_A (cos t/2 |0> + sin t/2 |1>)_B |1>_C, t = pi/2 by default."""
    return circuit_global_unitary(preparation_circuit(theta)) @ basis_state(LAYOUT, [0, 0, 0])


def frame_change_AB_compiled():
    """U_{A->B} as CNOT_{B->C} followed by SWAP_{A,B}."""
    return Circuit(LAYOUT, (builtin("CNOT", ["B", "C"]), builtin("SWAP", ["A", "B"])), "A")


def apply_frame_change_AB(psi):
    """Apply the compiled U_{A->B}; only defined on states with frame A in |0>."""
    psi = as_state(psi, dim=LAYOUT.dim)
    leak = float(np.linalg.norm(embed(LAYOUT, P1, ("A",)) @ psi))
    if leak > 1e-10:
        raise PreconditionError(f"frame A must be in |0>, found weight {leak ** 2:.3e} on |1>")
    return circuit_global_unitary(frame_change_AB_compiled()) @ psi


def frame_circuit(frame, theta=None):
    """Preparation in the lab frame A, followed by the change to B when `frame` is B."""
    prep = preparation_circuit(theta)
    if frame == "A":
        return prep
    return Circuit(LAYOUT, prep.gates + frame_change_AB_compiled().gates, "B")


def _frame_report(frame, shots, noise, rng, theta):
    simulator = DensityMatrixSimulator(LAYOUT, noise).run(frame_circuit(frame, theta))
    tomography = tomography_reconstruct(measure_all(simulator, shots, rng), keep=PAIR)
    report = resource_report(LAYOUT.sublayout(tomography.support), tomography.rho, PAIR, LOCAL, frame,
                             coherence_measure=PURITY)
    flags = (f"tomography_projected:{frame}",) if tomography.projected else ()
    if report.sum_CD > 1 + CONSERVATION_TOL:
        raise ConservationViolation(frame, f"shots={shots}", report.sum_CD - 1)
    return report, flags, tomography.rho


def run_protocol(shots=None, noise=NOISELESS, seed=None, theta=None, strict=False):
    """
    Prepare the lab state, describe it from frames A and B and compare C2_AC + D2_C.

    `shots == 0` evaluates exact Born probabilities. In strict mode a
    tomography estimate that had to be projected onto the state space raises.
    """
    shots = settings.QRF_DEFAULT_SHOTS if shots is None else shots
    rng = np.random.default_rng(seed)
    frame_a, flags_a, rho_a = _frame_report("A", shots, noise, rng, theta)
    frame_b, flags_b, rho_b = _frame_report("B", shots, noise, rng, theta)
    flags = flags_a + flags_b
    delta = frame_b.sum_CD - frame_a.sum_CD

    if shots == 0 and noise.is_noiseless and abs(delta) > 1e-12:
        raise ConservationViolation("B", "exact mode", delta)
    if strict and flags:
        raise ReconstructionError(flags)

    logger.info("Protocol run", shots=shots, noise=str(noise), seed=seed,
                sum_a=frame_a.sum_CD, sum_b=frame_b.sum_CD, delta=delta, flags=flags)
    return ProtocolResult(
        frame_a=frame_a,
        frame_b=frame_b,
        invariant_delta=delta,
        shots=shots,
        seed=seed,
        noise=noise,
        theta=np.pi / 2 if theta is None else theta,
        flags=flags,
        states={"A": rho_a, "B": rho_b},
    )
