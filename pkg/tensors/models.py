import math

from dataclasses import dataclass, field

from tensors.exceptions import InvalidLayoutError, UnknownLabelError

OLD_FRAME = "old_frame"
NEW_FRAME = "new_frame"
REGISTER = "register"


@dataclass(frozen=True)
class SystemLayout:
    labels: tuple
    local_dims: tuple
    roles: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if len(self.labels) == 0:
            raise InvalidLayoutError("at least one subsystem is required")
        if len(set(self.labels)) != len(self.labels):
            raise InvalidLayoutError(f"labels must be unique, got {self.labels!r}")
        if len(self.labels) != len(self.local_dims):
            raise InvalidLayoutError("one local dimension is required per label")
        if any(d < 1 for d in self.local_dims):
            raise InvalidLayoutError("local dimensions must be positive")

    @classmethod
    def uniform(cls, labels, dim, roles=None):
        labels = tuple(labels)
        return cls(labels, tuple(dim for _ in labels), roles or {})

    @property
    def dim(self):
        return math.prod(self.local_dims)

    def position(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(label, self.labels)

    def local_dim(self, label):
        return self.local_dims[self.position(label)]

    def dims_of(self, support):
        return tuple(self.local_dim(label) for label in support)

    def dim_of(self, support):
        return math.prod(self.dims_of(support))

    def sublayout(self, support):
        return SystemLayout(tuple(support), self.dims_of(support))

    def with_roles(self, **roles):
        for label in roles.values():
            if isinstance(label, str):
                self.position(label)
        return SystemLayout(self.labels, self.local_dims, {**self.roles, **roles})

    def __str__(self):
        return "(" + ",".join(self.labels) + ")"
