import numpy as np
import structlog
from django.conf import settings

from frames.exceptions import OperatorDimensionError
from frames.models import GateClass, GateKind
from groups.utils import find_character, regular_rep
from tensors.utils import dagger, kron

logger = structlog.getLogger(__name__)


def tensor_power(group, op):
    """Number k of group-order sites an operator acts on (dim = |G|^k)."""
    dim = np.shape(op)[0]
    d = group.order
    if d == 1:
        if dim != 1:
            raise OperatorDimensionError(dim, d)
        return 1
    k, size = 0, 1
    while size < dim:
        size *= d
        k += 1
    if size != dim or k == 0:
        raise OperatorDimensionError(dim, d)
    return k


def conjugation_action(group, g, op):
    """alpha_g(op) = U_R(g)^(x k) op U_R(g)^(x k)^dag."""
    k = tensor_power(group, op)
    rep = kron(*[regular_rep(group, g) for _ in range(k)])
    return rep @ np.asarray(op, dtype=complex) @ dagger(rep)


def orbit(group, op):
    return [(g, conjugation_action(group, g, op)) for g in group.elements]


def orbit_phases(group, op, tol):
    """Phases c_g with alpha_g(op) = c_g op, or None if some conjugate is not proportional."""
    op = np.asarray(op, dtype=complex)
    norm = np.linalg.norm(op)
    anchor = np.unravel_index(np.argmax(np.abs(op)), op.shape)
    phases = []
    for _, image in orbit(group, op):
        ratio = image[anchor] / op[anchor]
        if abs(ratio) == 0:
            return None
        phase = ratio / abs(ratio)
        if np.linalg.norm(image - phase * op) > tol * norm:
            return None
        phases.append(phase)
    return phases


def classify_gate(group, op, tol=None):
    tol = settings.QRF_CLASSIFY_TOL if tol is None else tol
    op = np.asarray(op, dtype=complex)
    norm = np.linalg.norm(op)

    images = orbit(group, op)
    if all(np.linalg.norm(image - op) <= tol * norm for _, image in images):
        return GateClass(GateKind.FRAME_ROBUST)

    phases = orbit_phases(group, op, tol)
    if phases is not None:
        chi = find_character(group, phases, tol=max(tol, 1e-10))
        if chi is not None:
            return GateClass(GateKind.PHASE_SECTOR, chi)
        logger.info("Proportional orbit without a character; treating as entangling", group=str(group))
    return GateClass(GateKind.ENTANGLING)
