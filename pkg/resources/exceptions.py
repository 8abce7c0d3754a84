from core.exceptions import UserError, InvariantBreach


class NotPositiveError(UserError):

    def __init__(self, eigenvalue):
        super().__init__(f"Density matrix is not positive semidefinite (smallest eigenvalue {eigenvalue:.3e})")


class QubitDimensionError(UserError):

    def __init__(self, shape, expected):
        super().__init__(f"Expected a {expected} input, got shape {tuple(shape)!r}")


class MeasureRangeError(InvariantBreach):

    def __init__(self, name, value):
        super().__init__(f"{name} = {value:.12f} is outside [0, 1]")
