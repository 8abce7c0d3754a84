from core.exceptions import UserError


class IdenticalFramesError(UserError):

    def __init__(self, label):
        super().__init__(f"Old and new frame must differ, both are {label!r}")


class LocalDimensionError(UserError):

    def __init__(self, label, dim, order):
        super().__init__(f"Subsystem {label!r} has local dimension {dim} but the group has order {order}")


class FrameLabelInSupportError(UserError):

    def __init__(self, support, frames):
        super().__init__(
            f"Support {tuple(support)!r} touches a frame label {tuple(frames)!r}; "
            "only operators on the registers can be transformed into controlled form"
        )


class OperatorDimensionError(UserError):

    def __init__(self, dim, order):
        super().__init__(f"Operator dimension {dim} is not a power of the group order {order}")
