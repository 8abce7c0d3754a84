import itertools

import numpy as np
import structlog
from django.conf import settings

from protocol.exceptions import InconsistentShotsError, MissingBasisError, ZeroShotsError
from protocol.models import TomographyResult
from protocol.z2 import LAYOUT
from tensors.utils import PAULIS, dagger, kron, trace_out

logger = structlog.getLogger(__name__)

N_QUBITS = 3
PAULI_BASES = tuple("".join(letters) for letters in itertools.product("XYZ", repeat=N_QUBITS))
PAULI_LABELS = tuple("".join(letters) for letters in itertools.product("IXYZ", repeat=N_QUBITS))


def measure_all(simulator, shots, rng):
    return [simulator.measure(basis, shots, rng) for basis in PAULI_BASES]


def _check_records(records):
    by_basis = {record.basis: record for record in records}
    missing = [basis for basis in PAULI_BASES if basis not in by_basis]
    if missing:
        raise MissingBasisError(missing)
    shots = {record.shots for record in by_basis.values()}
    if len(shots) != 1:
        raise InconsistentShotsError([record.shots for record in by_basis.values()])
    for record in by_basis.values():
        if record.shots == 0 and not record.is_exact:
            raise ZeroShotsError(record.basis)
    return by_basis


def _parity_expectation(frequencies, positions):
    return sum(
        f * (-1) ** sum(int(outcome[p]) for p in positions)
        for outcome, f in frequencies.items()
    )


def pauli_expectation(by_basis, label):
    """<P> averaged over every measured basis that agrees with `label` on its non-identity letters."""
    positions = [p for p, letter in enumerate(label) if letter != "I"]
    if not positions:
        return 1.0
    compatible = [
        record for basis, record in by_basis.items()
        if all(basis[p] == label[p] for p in positions)
    ]
    return float(np.mean([_parity_expectation(record.frequencies(), positions) for record in compatible]))


def linear_inversion(records):
    """rho = 2^-n sum_P <P> P over all 4^n Pauli strings."""
    by_basis = _check_records(records)
    dim = 2 ** N_QUBITS
    rho = np.zeros((dim, dim), dtype=complex)
    for label in PAULI_LABELS:
        rho += pauli_expectation(by_basis, label) * kron(*[PAULIS[letter] for letter in label])
    return rho / dim


def project_to_density(rho):
    """
    Closest density matrix in Frobenius norm.

    Negative eigenvalues are clipped from the bottom and their weight is
    spread evenly over the eigenvalues that remain.
    """
    rho = (rho + dagger(rho)) / 2
    rho = rho / np.trace(rho).real
    eigenvalues, vectors = np.linalg.eigh(rho)
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues, vectors = eigenvalues[order], vectors[:, order]

    fixed = eigenvalues.copy()
    deficit = 0.0
    i = len(fixed)
    while i > 0 and fixed[i - 1] + deficit / i < 0:
        deficit += fixed[i - 1]
        fixed[i - 1] = 0.0
        i -= 1
    fixed[:i] += deficit / i
    return (vectors * fixed) @ dagger(vectors)


def tomography_reconstruct(records, keep=None, layout=LAYOUT):
    """
    Linear inversion, optionally reduced to the `keep` subsystems, then projected if it is not a state.

    With `keep`, the marginal of the linear estimate is what gets projected;
    `rho` then lives on the kept subsystems only.
    """
    linear = linear_inversion(records)
    support = tuple(layout.labels) if keep is None else tuple(label for label in layout.labels if label in keep)
    estimate = linear if keep is None else trace_out(layout, linear, support)
    estimate = (estimate + dagger(estimate)) / 2
    smallest = float(np.linalg.eigvalsh(estimate).min())
    projected = smallest < -settings.QRF_PSD_TOL
    rho = project_to_density(estimate) if projected else estimate
    if projected:
        logger.info("Projected tomography estimate", min_eigenvalue=smallest, support=support)
    return TomographyResult(rho=rho, linear=linear, min_eigenvalue=smallest, projected=projected, support=support)
