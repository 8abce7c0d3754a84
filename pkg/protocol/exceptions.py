from core.exceptions import InvariantBreach, UserError


class NotPhysicalError(UserError):

    def __init__(self, reason):
        super().__init__(f"State is not in the physical subspace: {reason}")


class PreconditionError(UserError):

    def __init__(self, reason):
        super().__init__(f"Precondition not met: {reason}")


class InvalidNoiseError(UserError):

    def __init__(self, text, reason):
        super().__init__(f"Invalid noise model {text!r}: {reason}")


class InvalidBasisError(UserError):

    def __init__(self, basis):
        super().__init__(f"Measurement basis must be three letters from X, Y, Z, got {basis!r}")


class InvalidCountsError(UserError):

    def __init__(self, basis, reason):
        super().__init__(f"Counts for basis {basis} are invalid: {reason}")


class MissingBasisError(UserError):

    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"Tomography needs all 27 Pauli bases; missing {', '.join(self.missing)}")


class InconsistentShotsError(UserError):

    def __init__(self, shots):
        super().__init__(f"All bases must use the same number of shots, got {sorted(set(shots))}")


class ZeroShotsError(UserError):

    def __init__(self, basis):
        super().__init__(f"Basis {basis} has zero shots and no exact probabilities")


class UnknownFamilyError(UserError):

    def __init__(self, name, known):
        super().__init__(f"Unknown state family {name!r}; expected one of {', '.join(known)}")


class InvalidGridError(UserError):

    def __init__(self, text, reason):
        super().__init__(f"Invalid grid {text!r}: {reason}")


class ConservationViolation(InvariantBreach):

    def __init__(self, frame, where, residual):
        super().__init__(f"C2 + D2 = 1 broken in frame {frame} at {where} (residual {residual:.3e})")


class ReconstructionError(InvariantBreach):

    def __init__(self, flags):
        self.flags = tuple(flags)
        super().__init__("Tomography reconstruction needed projection: " + ", ".join(self.flags))
