from core.exceptions import UserError


class DimensionCapExceeded(UserError):

    def __init__(self, dimension, cap):
        self.dimension = dimension
        self.cap = cap
        super().__init__(f"Total dimension {dimension} exceeds the configured cap of {cap} (QRF_DIM_CAP)")


class UnknownLabelError(UserError):

    def __init__(self, label, labels):
        super().__init__(f"Unknown subsystem label {label!r}; layout has {', '.join(labels)}")


class InvalidLayoutError(UserError):

    def __init__(self, reason):
        super().__init__(f"Invalid layout: {reason}")


class DimensionMismatchError(UserError):

    def __init__(self, expected, actual, what="operator"):
        super().__init__(f"The {what} has dimension {actual} but {expected} was expected")


class InvalidBipartitionError(UserError):

    def __init__(self, cut):
        super().__init__(f"A cut must split the layout into two nonempty parts, got {tuple(cut)!r}")


class EmptyKeepError(UserError):

    def __init__(self):
        super().__init__("A partial trace must keep at least one subsystem")


class NotUnitaryError(UserError):

    def __init__(self, name, residual):
        super().__init__(f"{name} is not unitary (|U^dag U - 1| = {residual:.3e})")


class InvalidStateError(UserError):

    def __init__(self, reason):
        super().__init__(f"Invalid quantum state: {reason}")
