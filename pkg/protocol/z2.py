import numpy as np
import structlog

from circuits.gates import CNOT, SWAP, H
from frames.transform import build_frame_change
from groups.utils import make_group
from protocol.exceptions import NotPhysicalError
from protocol.models import PHYSICAL_BASIS, FrameView, PhysicalState
from tensors.models import SystemLayout
from tensors.utils import I2, X, Z, dagger, embed, kron

logger = structlog.getLogger(__name__)

Z2 = make_group([2])
LAYOUT = SystemLayout.uniform(("A", "B", "C"), 2)
P0 = np.diag([1, 0]).astype(complex)
P1 = np.diag([0, 1]).astype(complex)

CA_PHYSICAL_PERMUTATION = np.array([
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 1, 0, 0],
], dtype=complex)


def physical_projector():
    """(1 + Z_A Z_B Z_C) / 2."""
    return (np.eye(8) + kron(Z, Z, Z)) / 2


def physical_isometry():
    """8x4 map from physical-basis amplitudes to the full register."""
    isometry = np.zeros((8, 4), dtype=complex)
    for column, bits in enumerate(PHYSICAL_BASIS):
        isometry[int(bits, 2), column] = 1.0
    return isometry


def restrict_to_physical(op):
    isometry = physical_isometry()
    return dagger(isometry) @ np.asarray(op, dtype=complex) @ isometry


def subspace_residual(op):
    """|| P U P - U P ||; zero when `op` maps the physical subspace into itself."""
    projector = physical_projector()
    return float(np.linalg.norm(projector @ op @ projector - op @ projector))


def frame_change_CA():
    """U_{C->A} = SWAP_{C,A} CNOT_{A->B} CNOT_{A->C}."""
    return build_frame_change(LAYOUT, Z2, "C", "A", dress_old_frame=True)


def frame_change_CB():
    """U_{C->B} = SWAP_{C,B} CNOT_{B->A} CNOT_{B->C}."""
    return build_frame_change(LAYOUT, Z2, "C", "B", dress_old_frame=True)


def relational_frame_change(old_frame, new_frame):
    """Undressed change SWAP . sum_g |g><g|_new (x) X^g on the remaining register."""
    return build_frame_change(LAYOUT, Z2, old_frame, new_frame)


def frame_view(state, frame):
    """
    Describe a physical state from `frame`: apply U_{C->frame} and condition on the frame register.

    Frame C is the description the state is given in.
    """
    psi = state.embed() if isinstance(state, PhysicalState) else np.asarray(state, dtype=complex)
    if psi.shape != (8,):
        raise NotPhysicalError(f"expected an 8-dimensional state, got {psi.shape}")
    if frame == "A":
        psi = frame_change_CA().dense @ psi
    elif frame == "B":
        psi = frame_change_CB().dense @ psi
    else:
        LAYOUT.position(frame)

    others = tuple(label for label in LAYOUT.labels if label != frame)
    position = LAYOUT.position(frame)
    tensor = psi.reshape(2, 2, 2)
    conditionals = tuple(np.take(tensor, k, axis=position).reshape(4) for k in range(2))
    reduced = sum(np.outer(chi, np.conj(chi)) for chi in conditionals)
    return FrameView(frame=frame, others=others, conditionals=conditionals, reduced=reduced)


def _gate(op, support):
    return embed(LAYOUT, op, support)


def operator_identity_suite():
    """Residuals of the closed-form operator identities of the three-qubit model, keyed by name."""
    u_cb = relational_frame_change("C", "B").dense
    u_ca = relational_frame_change("C", "A").dense
    u_ab = relational_frame_change("A", "B").dense
    w_ba = _gate(CNOT, ("B", "A"))
    w_ab = _gate(CNOT, ("A", "B"))
    hadamard_a = _gate(H, ("A",))
    cnot_ab = _gate(CNOT, ("A", "B"))

    def conjugate(u, op):
        return u @ op @ dagger(u)

    closed_forms = {
        "U_CB_factorization": (u_cb, _gate(SWAP, ("B", "C")) @ w_ba),
        "U_CA_factorization": (u_ca, _gate(SWAP, ("A", "C")) @ w_ab),
        "H_A_frame_B": (
            conjugate(u_cb, hadamard_a),
            _gate(kron(P0, H) + kron(P1, X @ H @ X), ("C", "A")),
        ),
        "W_CNOT_W": (conjugate(w_ba, cnot_ab), _gate(SWAP, ("A", "B"))),
        "CNOT_B_frame": (conjugate(u_cb, cnot_ab), _gate(SWAP, ("A", "C"))),
        "H_A_frame_A": (
            conjugate(u_ca, hadamard_a),
            _gate((kron(Z, I2) + kron(X, X)) / np.sqrt(2), ("C", "B")),
        ),
        "CNOT_A_frame": (conjugate(u_ca, cnot_ab), _gate(CNOT, ("C", "B"))),
        "global_phase": (conjugate(u_cb, np.exp(0.3j) * np.eye(8)), np.exp(0.3j) * np.eye(8)),
        "U_AB_compiled": (u_ab, _gate(SWAP, ("A", "B")) @ _gate(CNOT, ("B", "C"))),
    }
    residuals = {name: float(np.linalg.norm(lhs - rhs)) for name, (lhs, rhs) in closed_forms.items()}
    logger.debug("Operator identities", worst=max(residuals.values()))
    return residuals
