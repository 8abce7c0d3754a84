from core.exceptions import UserError


class InvalidGroupError(UserError):

    def __init__(self, factors):
        self.factors = factors
        super().__init__(f"A group needs at least one cyclic factor and every factor must be >= 1, got {factors!r}")


class GroupElementError(UserError):

    def __init__(self, coords, factors):
        super().__init__(f"Element {tuple(coords)!r} is not valid in Z_{' x Z_'.join(str(n) for n in factors)}")


class InvalidCharacterError(UserError):

    def __init__(self, label, factors):
        super().__init__(f"Character label {tuple(label)!r} does not match factors {tuple(factors)!r}")
