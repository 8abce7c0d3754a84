from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import structlog
from django.conf import settings
from scipy.stats import unitary_group

from circuits.compiler import circuit_global_unitary, compile_circuit, overhead_report
from circuits.gates import H, S, rx
from circuits.library import bell_circuit, random_circuit
from core.exceptions import QrfException
from frames.classification import classify_gate, conjugation_action
from frames.transform import build_frame_change, verify_gate_transform
from groups.utils import make_group
from protocol.experiment import run_protocol
from protocol.simulator import DensityMatrixSimulator
from protocol.sweep import lambda_sweep
from protocol.tomography import measure_all, tomography_reconstruct
from protocol.z2 import (
    CA_PHYSICAL_PERMUTATION,
    LAYOUT,
    frame_change_CA,
    frame_change_CB,
    operator_identity_suite,
    restrict_to_physical,
    subspace_residual,
)
from resources.measures import complementarity_check
from tensors.models import SystemLayout
from tensors.utils import X, Z, dagger, pure_density

logger = structlog.get_logger(__name__)

Z2 = make_group([2])


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self):
        return bool(np.isfinite(self.residual)) and self.residual < self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check.name for check in self.checks if not check.passed]


def check_gate_transform(rng, samples=100):
    worst = 0.0
    for factors in ([2], [3], [4], [2, 2]):
        group = make_group(factors)
        layout = SystemLayout.uniform(("0", "i", "R"), group.order)
        fc = build_frame_change(layout, group, "0", "i")
        for _ in range(samples):
            u = unitary_group.rvs(group.order, random_state=rng)
            worst = max(worst, verify_gate_transform(fc, u, ["R"]))
    return worst, f"{samples} Haar unitaries per group"


def check_trichotomy(rng):
    wrong = []
    for theta in rng.uniform(0, 2 * np.pi, size=20):
        if not classify_gate(Z2, rx(theta)).is_robust:
            wrong.append(f"RX({theta:.3f})")
    z_class = classify_gate(Z2, Z)
    if not (z_class.is_phase_sector and abs(z_class.character(Z2.element(1)) + 1) < 1e-12):
        wrong.append("Z")
    for name, gate in (("H", H), ("S", S)):
        if not classify_gate(Z2, gate).is_entangling:
            wrong.append(name)
    xhx = np.linalg.norm(conjugation_action(Z2, Z2.element(1), H) - (X - Z) / np.sqrt(2))
    return len(wrong) + xhx, ", ".join(wrong) or "all classes as expected"


def check_physical_permutation(rng):
    golden = np.linalg.norm(restrict_to_physical(frame_change_CA().dense) - CA_PHYSICAL_PERMUTATION)
    invariance = max(subspace_residual(frame_change_CA().dense), subspace_residual(frame_change_CB().dense))
    return golden + invariance, f"subspace residual {invariance:.1e}"


def check_operator_identities(rng):
    residuals = operator_identity_suite()
    worst = max(residuals, key=residuals.get)
    return residuals[worst], f"worst: {worst}"


def check_bell_complexity(rng):
    circuit = bell_circuit()
    fc = build_frame_change(circuit.layout, Z2, "C", "B")
    compiled = compile_circuit(circuit, fc)
    report = overhead_report(circuit, Z2, fc, compiled=compiled)
    expected = (report.n_ent_old, report.n_ent_new, report.bound, report.saturated) == (1, 2, 2, True)
    target = fc.dense @ circuit_global_unitary(circuit) @ dagger(fc.dense)
    residual = float(np.linalg.norm(target - circuit_global_unitary(compiled)))
    return residual + (0 if expected else 1), f"n_ent {report.n_ent}, bound {report.bound}"


def check_overhead_bound(rng, samples=500):
    worst, violations = 0.0, 0
    for _ in range(samples):
        circuit = random_circuit(rng)
        fc = build_frame_change(circuit.layout, Z2, "F", ["A", "B", "C"][rng.integers(3)])
        compiled = compile_circuit(circuit, fc)
        target = fc.dense @ circuit_global_unitary(circuit) @ dagger(fc.dense)
        worst = max(worst, float(np.linalg.norm(target - circuit_global_unitary(compiled))))
        try:
            overhead_report(circuit, Z2, fc, compiled=compiled)
        except QrfException:
            violations += 1
    return worst + violations, f"{samples} circuits, {violations} bound violations"


def check_complementarity(rng, samples=2000):
    worst = 0.0
    for _ in range(samples):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        check = complementarity_check(psi / np.linalg.norm(psi))
        worst = max(worst, check.residual, check.total_residual)
    return worst, f"{samples} Haar states"


def check_protocol(rng):
    result = run_protocol(shots=0, seed=int(rng.integers(2 ** 31)))
    deviation = max(
        abs(result.frame_a.D2_purity - 1), abs(result.frame_a.C2),
        abs(result.frame_b.D2_purity), abs(result.frame_b.C2 - 1),
        abs(result.invariant_delta),
    )
    return deviation, f"delta {result.invariant_delta:.1e}"


def check_sweep(rng):
    result = lambda_sweep("default", "0:pi/2:33")
    missing = 33 - len(result.rows)
    return result.max_residual + missing, f"{len(result.rows)} points, {len(result.rejected)} rejected"


def check_tomography(rng):
    psi = unitary_group.rvs(8, random_state=rng)[:, 0]
    simulator = DensityMatrixSimulator(LAYOUT)
    simulator.rho = pure_density(psi)
    result = tomography_reconstruct(measure_all(simulator, 0, rng))
    return float(np.linalg.norm(result.rho - simulator.rho)), "exact Pauli expectations"


CHECKS = (
    ("gate_transform", check_gate_transform, 1e-10),
    ("trichotomy", check_trichotomy, 1e-12),
    ("physical_permutation", check_physical_permutation, 1e-12),
    ("operator_identities", check_operator_identities, 1e-10),
    ("bell_complexity", check_bell_complexity, 1e-9),
    ("overhead_bound", check_overhead_bound, 1e-9),
    ("complementarity", check_complementarity, 1e-10),
    ("protocol_exact", check_protocol, 1e-10),
    ("lambda_sweep", check_sweep, 1e-9),
    ("tomography_exact", check_tomography, 1e-10),
)


def _run_check(name, check, tolerance, seed):
    try:
        residual, detail = check(np.random.default_rng(seed))
    except QrfException as ex:
        residual, detail = float("inf"), str(ex)
    result = CheckResult(name, float(residual), tolerance, detail)
    if not result.passed:
        logger.error("Verification check failed", check=name, residual=result.residual, detail=detail)
    return result


def run_verification(seed=None, workers=None, only=None):
    """Run every check (or those named in `only`); independent checks may share a thread pool."""
    workers = settings.QRF_VERIFY_WORKERS if workers is None else workers
    base = np.random.SeedSequence(seed)
    selected = [(entry, child) for entry, child in zip(CHECKS, base.spawn(len(CHECKS)))
                if only is None or entry[0] in only]
    jobs = [(name, check, tolerance, child) for (name, check, tolerance), child in selected]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: _run_check(*job), jobs))
    else:
        results = [_run_check(*job) for job in jobs]
    report = VerificationReport(tuple(results))
    logger.info("Verification", passed=report.passed, failures=report.failures, workers=workers)
    return report
