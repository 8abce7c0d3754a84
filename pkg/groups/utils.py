import cmath
import math

import numpy as np
import structlog

from groups.exceptions import InvalidGroupError, GroupElementError
from groups.models import FiniteAbelianGroup, GroupElement, Character

logger = structlog.getLogger(__name__)

PHASE_TOL = 1e-10


def make_group(factors):
    factors = tuple(factors)
    if len(factors) == 0:
        raise InvalidGroupError(factors)
    for n in factors:
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
            raise InvalidGroupError(factors)
    return FiniteAbelianGroup(tuple(int(n) for n in factors))


def parse_group(spec):
    """Parse a comma separated factor list such as "2" or "2,2"."""
    try:
        factors = [int(part) for part in str(spec).split(",")]
    except ValueError:
        raise InvalidGroupError(spec)
    return make_group(factors)


def as_element(group, g):
    if isinstance(g, GroupElement):
        return group.validate(g)
    if isinstance(g, (int, np.integer)):
        if len(group.factors) != 1:
            raise GroupElementError((g,), group.factors)
        return group.validate(GroupElement((int(g),)))
    return group.validate(GroupElement(tuple(int(c) for c in g)))


def compose(group, g, h):
    g = as_element(group, g)
    h = as_element(group, h)
    return GroupElement(tuple((a + b) % n for a, b, n in zip(g.coords, h.coords, group.factors)))


def inverse(group, g):
    g = as_element(group, g)
    return GroupElement(tuple((-a) % n for a, n in zip(g.coords, group.factors)))


def regular_rep(group, g):
    """Right-regular representation U_R(g)|h> = |h g^-1> as a permutation matrix."""
    g_inv = inverse(group, g)
    rep = np.zeros((group.order, group.order), dtype=complex)
    for h in group.elements:
        rep[group.index(compose(group, h, g_inv)), group.index(h)] = 1.0
    return rep


def character(group, label):
    return Character(group, tuple(int(m) for m in label))


def characters(group):
    return [character(group, m.coords) for m in group.elements]


def find_character(group, phases, tol=PHASE_TOL):
    """
    Recover the character whose values match `phases` (one per element in
    canonical order), or None when no character fits.
    """
    if len(phases) != group.order:
        return None
    label = []
    for j, n in enumerate(group.factors):
        coords = [0] * len(group.factors)
        coords[j] = 1 % n
        phase = phases[group.index(GroupElement(tuple(coords)))]
        if abs(abs(phase) - 1.0) > tol:
            return None
        label.append(round(n * cmath.phase(phase) / (2 * math.pi)) % n)

    chi = character(group, label)
    for g, phase in zip(group.elements, phases):
        if abs(chi(g) - phase) > tol:
            logger.debug("Orbit phases are not multiplicative", group=str(group), label=label)
            return None
    return chi
