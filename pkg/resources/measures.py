import numpy as np
import structlog
from django.conf import settings

from resources.exceptions import MeasureRangeError, NotPositiveError, QubitDimensionError
from resources.models import BlochVector, Complementarity, ResourceReport, SchmidtDecomposition, PURITY
from tensors.models import SystemLayout
from tensors.utils import X, Y, Z, as_density_matrix, as_state, dagger, kron, partial_trace, permute_state, pure_density

logger = structlog.getLogger(__name__)

RANGE_TOL = 1e-9
PURE_TOL = 1e-10
TWO_QUBITS = SystemLayout(("X", "Y"), (2, 2))
SPIN_FLIP = kron(Y, Y)


def _qubit_state(rho):
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise QubitDimensionError(rho.shape, "2x2 density matrix")
    return as_density_matrix(rho)


def _clip(value, name="measure"):
    if not -RANGE_TOL <= value <= 1 + RANGE_TOL:
        raise MeasureRangeError(name, value)
    return float(min(1.0, max(0.0, value)))


def bloch(rho):
    rho = _qubit_state(rho)
    return BlochVector(*(float(np.trace(sigma @ rho).real) for sigma in (X, Y, Z)))


def d2_coherence(rho):
    """Off-diagonal coherence r_x^2 + r_y^2 = 4 |rho_01|^2."""
    rho = _qubit_state(rho)
    return _clip(4 * abs(rho[0, 1]) ** 2, "D2")


def p2_predictability(rho):
    rho = _qubit_state(rho)
    return _clip((rho[0, 0].real - rho[1, 1].real) ** 2, "P2")


def d2_purity_coherence(rho):
    rho = _qubit_state(rho)
    return _clip(2 * np.trace(rho @ rho).real - 1, "D2_purity")


def concurrence2_pure(psi):
    psi = as_state(psi, dim=4)
    m = psi.reshape(2, 2)
    marginal = m @ dagger(m)
    return _clip(4 * np.linalg.det(marginal).real, "C2")


def concurrence2_mixed(rho):
    """Squared Wootters concurrence from the spin-flipped state."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise QubitDimensionError(rho.shape, "4x4 density matrix")
    rho = as_density_matrix(rho, psd_tol=np.inf)
    eigenvalues, vectors = np.linalg.eigh(rho)
    if eigenvalues.min() < -settings.QRF_PSD_TOL:
        raise NotPositiveError(eigenvalues.min())

    if np.trace(rho @ rho).real > 1 - PURE_TOL:
        marginal = partial_trace(TWO_QUBITS, rho, ["X"])
        return _clip(2 * (1 - np.trace(marginal @ marginal).real), "C2")

    root = vectors @ np.diag(np.sqrt(np.clip(eigenvalues, 0, None))) @ dagger(vectors)
    # singular values of sqrt(rho) YY sqrt(rho)* are the square roots of the spin-flip spectrum
    lambdas = np.linalg.svd(root @ SPIN_FLIP @ np.conj(root), compute_uv=False)
    concurrence = max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])
    return _clip(concurrence ** 2, "C2")


def schmidt(psi, layout=None, cut=None):
    """Schmidt coefficients (descending) and local bases of a bipartite pure state."""
    layout = TWO_QUBITS if layout is None else layout
    cut = [layout.labels[0]] if cut is None else list(cut)
    psi = as_state(psi, dim=layout.dim)
    rest = [label for label in layout.labels if label not in cut]
    ordered = permute_state(layout, psi, cut + rest)
    matrix = ordered.reshape(layout.dim_of(cut), layout.dim_of(rest))
    left, coefficients, right = np.linalg.svd(matrix, full_matrices=False)
    return SchmidtDecomposition(tuple(float(c) for c in coefficients), left.T, right)


def complementarity_check(psi):
    psi = as_state(psi, dim=4)
    rho = pure_density(psi)
    first = partial_trace(TWO_QUBITS, rho, ["X"])
    second = partial_trace(TWO_QUBITS, rho, ["Y"])
    return Complementarity(
        C2=concurrence2_pure(psi),
        D2=d2_coherence(first),
        P2=p2_predictability(first),
        D2_total=(d2_purity_coherence(first) + d2_purity_coherence(second)) / 2,
    )


def resource_report(layout, rho, pair, local, frame, coherence_measure=PURITY):
    """C^2 of `pair` and the coherence/predictability of `local`, computed from a state on `layout`."""
    pair = tuple(pair)
    rho_pair = partial_trace(layout, rho, pair)
    rho_local = partial_trace(layout, rho, [local])
    C2 = concurrence2_mixed(rho_pair)
    D2 = d2_coherence(rho_local)
    D2_purity = d2_purity_coherence(rho_local)
    flags = ("coherence_measures_diverge",) if abs(D2 - D2_purity) > 1e-6 else ()
    logger.debug("Resource report", frame=frame, C2=C2, D2=D2, D2_purity=D2_purity)
    return ResourceReport(
        frame=frame,
        pair=pair,
        local=local,
        C2=C2,
        D2=D2,
        P2=p2_predictability(rho_local),
        D2_purity=D2_purity,
        coherence_measure=coherence_measure,
        flags=flags,
    )
