import numpy as np
import structlog

from frames.exceptions import (
    FrameLabelInSupportError,
    IdenticalFramesError,
    LocalDimensionError,
)
from frames.models import ControlledOperator, FrameChange
from groups.utils import inverse, regular_rep
from tensors.exceptions import DimensionMismatchError
from tensors.models import OLD_FRAME, NEW_FRAME, REGISTER
from tensors.utils import dagger, embed, kron, check_dimension

logger = structlog.getLogger(__name__)


def swap_matrix(d):
    swap = np.zeros((d * d, d * d), dtype=complex)
    for a in range(d):
        for b in range(d):
            swap[b * d + a, a * d + b] = 1.0
    return swap


def assemble_frame_change(layout, group, old_frame, new_frame, dress_old_frame=False, inverted=False):
    layout.position(old_frame)
    layout.position(new_frame)
    if old_frame == new_frame:
        raise IdenticalFramesError(old_frame)
    for label, dim in zip(layout.labels, layout.local_dims):
        if dim != group.order:
            raise LocalDimensionError(label, dim, group.order)
    check_dimension(layout.dim)

    registers = tuple(label for label in layout.labels if label not in (old_frame, new_frame))
    targets = registers + ((old_frame,) if dress_old_frame else ())
    targets = tuple(label for label in layout.labels if label in targets)
    layout = layout.with_roles(**{OLD_FRAME: old_frame, NEW_FRAME: new_frame, REGISTER: registers})

    d = group.order
    controlled = np.zeros((layout.dim, layout.dim), dtype=complex)
    blocks = []
    for g in group.elements:
        rep = regular_rep(group, inverse(group, g) if inverted else g)
        projector = np.zeros((d, d), dtype=complex)
        projector[group.index(g), group.index(g)] = 1.0
        controlled += embed(layout, kron(projector, *[rep for _ in targets]), (new_frame,) + targets)
        blocks.append((g, {label: rep for label in targets}))

    dense = embed(layout, swap_matrix(d), (old_frame, new_frame)) @ controlled
    logger.debug("Built frame change", old=old_frame, new=new_frame, group=str(group),
                 dressed=dress_old_frame, inverted=inverted, dim=layout.dim)
    return FrameChange(
        layout=layout,
        group=group,
        old_frame=old_frame,
        new_frame=new_frame,
        registers=registers,
        dress_old_frame=dress_old_frame,
        inverted=inverted,
        swap=(old_frame, new_frame),
        controlled_blocks=tuple(blocks),
        dense=dense,
    )


def build_frame_change(layout, group, old_frame, new_frame, dress_old_frame=False):
    """
    U_{old->new}. Maps |e>_old |g>_new (x) |g_k> to |g>_old |e>_new (x) |g_k g^-1>.

    With `dress_old_frame` the group action also reaches the old frame,
    which keeps constrained (gauge invariant) subspaces invariant.
    """
    return assemble_frame_change(layout, group, old_frame, new_frame, dress_old_frame=dress_old_frame)


def transform_observable(fc, observable):
    """Heisenberg image U A U^dag of an operator on the full layout."""
    return fc.dense @ observable @ dagger(fc.dense)


def transform_operator(fc, op, support):
    """Controlled form sum_g |g><g|_old (x) V_g op V_g^dag of an operator on registers."""
    support = tuple(support)
    frames = (fc.old_frame, fc.new_frame)
    if any(label in frames for label in support):
        raise FrameLabelInSupportError(support, frames)
    op = np.asarray(op, dtype=complex)
    for label in support:
        fc.layout.position(label)
    expected = fc.layout.dim_of(support)
    if op.shape != (expected, expected):
        raise DimensionMismatchError(expected, op.shape)

    blocks = []
    for g in fc.group.elements:
        rep = fc.block_rep(g, support)
        blocks.append((g, rep @ op @ dagger(rep)))
    spectators = tuple(label for label in fc.layout.labels if label not in support and label != fc.old_frame)
    return ControlledOperator(
        layout=fc.layout,
        group=fc.group,
        control=fc.old_frame,
        target=support,
        spectators=spectators,
        blocks=tuple(blocks),
    )


def verify_gate_transform(fc, op, support):
    """Frobenius distance between dense conjugation and the structured controlled form."""
    controlled = transform_operator(fc, op, support)
    conjugated = transform_observable(fc, embed(fc.layout, op, support))
    return float(np.linalg.norm(conjugated - controlled.dense()))


def inversion_relabeling(group):
    """J|g> = |g^-1>; relates the inverse change to the reversed one for groups beyond exponent two."""
    d = group.order
    relabel = np.zeros((d, d), dtype=complex)
    for g in group.elements:
        relabel[group.index(inverse(group, g)), group.index(g)] = 1.0
    return relabel
