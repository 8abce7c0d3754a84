import functools
import math

import numpy as np
import structlog
from django.conf import settings

from tensors.exceptions import (
    DimensionCapExceeded,
    DimensionMismatchError,
    EmptyKeepError,
    InvalidBipartitionError,
    InvalidStateError,
    NotUnitaryError,
)

logger = structlog.getLogger(__name__)

UNITARY_TOL = 1e-10
NORM_TOL = 1e-10

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = {"I": I2, "X": X, "Y": Y, "Z": Z}


def dimension_cap():
    return int(getattr(settings, "QRF_DIM_CAP", 2 ** 14))


def check_dimension(dimension):
    cap = dimension_cap()
    if dimension > cap:
        raise DimensionCapExceeded(dimension, cap)
    return dimension


def kron(*ops):
    """Kronecker product of any number of matrices, left factor most significant."""
    check_dimension(math.prod(np.shape(op)[0] for op in ops))
    return functools.reduce(np.kron, [np.asarray(op, dtype=complex) for op in ops], np.eye(1, dtype=complex))


def dagger(op):
    return np.conj(np.transpose(op))


def is_unitary(op, tol=UNITARY_TOL):
    op = np.asarray(op)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        return False
    return np.linalg.norm(dagger(op) @ op - np.eye(op.shape[0])) <= tol


def as_unitary(op, name="operator", tol=UNITARY_TOL):
    op = np.asarray(op, dtype=complex)
    if op.ndim != 2 or op.shape[0] != op.shape[1]:
        raise DimensionMismatchError("a square matrix", op.shape, what=name)
    residual = np.linalg.norm(dagger(op) @ op - np.eye(op.shape[0]))
    if residual > tol:
        raise NotUnitaryError(name, residual)
    return op


def as_state(psi, dim=None):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    if dim is not None and psi.shape[0] != dim:
        raise DimensionMismatchError(dim, psi.shape[0], what="state vector")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > NORM_TOL:
        raise InvalidStateError(f"state norm is {norm:.12f}, not 1")
    return psi


def as_density_matrix(rho, dim=None, psd_tol=None):
    psd_tol = settings.QRF_PSD_TOL if psd_tol is None else psd_tol
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError("a density matrix must be square")
    if dim is not None and rho.shape[0] != dim:
        raise DimensionMismatchError(dim, rho.shape[0], what="density matrix")
    if np.linalg.norm(rho - dagger(rho)) > 1e-10:
        raise InvalidStateError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > 1e-10:
        raise InvalidStateError(f"trace is {np.trace(rho).real:.12f}, not 1")
    smallest = np.linalg.eigvalsh(rho).min()
    if smallest < -psd_tol:
        raise InvalidStateError(f"density matrix has eigenvalue {smallest:.3e}")
    return rho


def is_density_matrix(rho, psd_tol=None):
    try:
        as_density_matrix(rho, psd_tol=psd_tol)
    except (InvalidStateError, DimensionMismatchError):
        return False
    return True


def pure_density(psi):
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, np.conj(psi))


def basis_state(layout, values):
    """|v_1 v_2 ...> over the layout, values given per label in layout order."""
    ket = np.zeros(layout.dim, dtype=complex)
    index = 0
    for v, d in zip(values, layout.local_dims):
        index = index * d + int(v)
    ket[index] = 1.0
    return ket


def _check_support(layout, support, op=None):
    support = tuple(support)
    for label in support:
        layout.position(label)
    if len(set(support)) != len(support):
        raise DimensionMismatchError("distinct labels", support, what="support")
    if op is not None:
        expected = layout.dim_of(support)
        if np.shape(op) != (expected, expected):
            raise DimensionMismatchError(expected, np.shape(op), what="operator")
    return support


def _axis_order(layout, first):
    return list(first) + [label for label in layout.labels if label not in first]


def embed(layout, op, support):
    """Act with `op` on the ordered `support` and as identity on every other label."""
    support = _check_support(layout, support, op)
    check_dimension(layout.dim)
    order = _axis_order(layout, support)
    rest_dim = layout.dim // layout.dim_of(support)
    full = np.kron(np.asarray(op, dtype=complex), np.eye(rest_dim, dtype=complex))
    dims = [layout.local_dim(label) for label in order]
    n = len(order)
    perm = [order.index(label) for label in layout.labels]
    tensor = full.reshape(dims + dims).transpose(perm + [n + p for p in perm])
    return tensor.reshape(layout.dim, layout.dim)


def permute_state(layout, psi, order):
    """Reorder the tensor factors of a state vector from layout order to `order`."""
    order = _check_support(layout, order)
    dims = list(layout.local_dims)
    perm = [layout.position(label) for label in order]
    return np.asarray(psi).reshape(dims).transpose(perm).reshape(-1)


def trace_out(layout, op, keep):
    """Partial trace of any square operator; kept labels stay in layout order."""
    keep = [label for label in layout.labels if label in set(_check_support(layout, keep))]
    if len(keep) == 0:
        raise EmptyKeepError()
    traced = [label for label in layout.labels if label not in keep]
    order = keep + traced
    dims = [layout.local_dim(label) for label in order]
    n = len(order)
    perm = [layout.position(label) for label in order]
    tensor = np.asarray(op, dtype=complex).reshape(list(layout.local_dims) * 2)
    tensor = tensor.transpose(perm + [n + p for p in perm])
    dk = math.prod(dims[:len(keep)])
    dt = math.prod(dims[len(keep):])
    return np.einsum("ajbj->ab", tensor.reshape(dk, dt, dk, dt))


def partial_trace(layout, rho, keep):
    keep = tuple(keep)
    if len(keep) == 0:
        raise EmptyKeepError()
    rho = as_density_matrix(rho, dim=layout.dim)
    reduced = trace_out(layout, rho, keep)
    return (reduced + dagger(reduced)) / 2


def proportional_up_to_phase(a, b, tol=1e-10):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatchError(b.shape, a.shape, what="matrix")
    norm_b = np.linalg.norm(b)
    if norm_b == 0:
        return bool(np.linalg.norm(a) == 0)
    anchor = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    ratio = a[anchor] / b[anchor]
    if abs(ratio) == 0:
        return False
    c = ratio / abs(ratio)
    return bool(np.linalg.norm(a - c * b) <= tol * norm_b)


def reshuffle(layout, op, cut):
    """Realign `op` so that rows index the `cut` side and columns the rest."""
    cut = _check_support(layout, cut)
    rest = [label for label in layout.labels if label not in cut]
    if len(cut) == 0 or len(rest) == 0:
        raise InvalidBipartitionError(cut)
    if np.shape(op) != (layout.dim, layout.dim):
        raise DimensionMismatchError(layout.dim, np.shape(op), what="operator")
    order = list(cut) + rest
    n = len(order)
    perm = [layout.position(label) for label in order]
    tensor = np.asarray(op, dtype=complex).reshape(list(layout.local_dims) * 2)
    tensor = tensor.transpose(perm + [n + p for p in perm])
    da = layout.dim_of(cut)
    db = layout.dim // da
    # (a_out, b_out, a_in, b_in) -> (a_out, a_in, b_out, b_in)
    tensor = tensor.reshape(da, db, da, db).transpose(0, 2, 1, 3)
    return tensor.reshape(da * da, db * db)


def operator_schmidt_values(layout, op, cut):
    return np.linalg.svd(reshuffle(layout, op, cut), compute_uv=False)


def operator_schmidt_rank(layout, op, cut, tol=None):
    tol = settings.QRF_SCHMIDT_TOL if tol is None else tol
    return int(np.sum(operator_schmidt_values(layout, op, cut) > tol))


def is_product_operator(layout, op, tol=None):
    """True when `op` factorizes as a tensor product over the single labels of `layout`."""
    if len(layout.labels) < 2:
        return True
    return all(operator_schmidt_rank(layout, op, [label], tol=tol) == 1 for label in layout.labels)


def reduce_support(layout, op, tol=1e-10):
    """
    Drop labels on which `op` acts as the identity.

    Returns the remaining labels (layout order) and the operator on them.
    At least one label is always kept.
    """
    op = np.asarray(op, dtype=complex)
    current = layout
    for label in layout.labels:
        if len(current.labels) == 1:
            break
        rest = [other for other in current.labels if other != label]
        d = current.local_dim(label)
        reduced = trace_out(current, op, rest) / d
        rebuilt = embed(current, reduced, rest)
        if np.linalg.norm(rebuilt - op) <= tol * max(np.linalg.norm(op), 1.0):
            op = reduced
            current = current.sublayout(rest)
    return current.labels, op
