import cmath
import math

from dataclasses import dataclass
from functools import cached_property

from groups.exceptions import GroupElementError, InvalidCharacterError


@dataclass(frozen=True)
class GroupElement:
    coords: tuple

    def __str__(self):
        if len(self.coords) == 1:
            return str(self.coords[0])
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """
    Product of cyclic groups Z_n1 x ... x Z_nk.

    Elements are enumerated mixed-radix over the factors with the last
    factor running fastest, so element index i is also the basis index
    of |g_i> in the group-element basis.
    """
    factors: tuple

    @property
    def order(self):
        return math.prod(self.factors)

    @property
    def identity(self):
        return GroupElement(tuple(0 for _ in self.factors))

    @cached_property
    def elements(self):
        return tuple(self.element(i) for i in range(self.order))

    def element(self, index):
        if not 0 <= index < self.order:
            raise GroupElementError((index,), self.factors)
        coords = []
        for n in reversed(self.factors):
            coords.append(index % n)
            index //= n
        return GroupElement(tuple(reversed(coords)))

    def index(self, g):
        self.validate(g)
        index = 0
        for c, n in zip(g.coords, self.factors):
            index = index * n + c
        return index

    def validate(self, g):
        if len(g.coords) != len(self.factors):
            raise GroupElementError(g.coords, self.factors)
        for c, n in zip(g.coords, self.factors):
            if not 0 <= c < n:
                raise GroupElementError(g.coords, self.factors)
        return g

    def __str__(self):
        return " x ".join(f"Z{n}" for n in self.factors)


@dataclass(frozen=True)
class Character:
    group: FiniteAbelianGroup
    label: tuple

    def __post_init__(self):
        if len(self.label) != len(self.group.factors):
            raise InvalidCharacterError(self.label, self.group.factors)
        for m, n in zip(self.label, self.group.factors):
            if not 0 <= m < n:
                raise InvalidCharacterError(self.label, self.group.factors)

    def __call__(self, g):
        self.group.validate(g)
        angle = sum(m * c / n for m, c, n in zip(self.label, g.coords, self.group.factors))
        return cmath.exp(2j * math.pi * angle)

    def values(self):
        return [self(g) for g in self.group.elements]

    def __str__(self):
        return "chi" + str(GroupElement(self.label))
