from core.exceptions import UserError, InvariantBreach


class UnknownGateError(UserError):

    def __init__(self, name):
        super().__init__(f"Unknown builtin gate {name!r}; expected one of H, X, Y, Z, S, T, RX(theta), RY(theta), RZ(theta), CNOT, CZ, SWAP")


class GateSupportError(UserError):

    def __init__(self, name, support, reason):
        super().__init__(f"Gate {name} on {tuple(support)!r}: {reason}")


class GateOnFrameError(UserError):

    def __init__(self, index, name, frame):
        self.index = index
        super().__init__(f"Gate #{index} ({name}) acts on the frame {frame!r} the circuit is expressed in")


class FrameMismatchError(UserError):

    def __init__(self, circuit_frame, fc_frame):
        super().__init__(f"Circuit is expressed in frame {circuit_frame!r} but the frame change starts from {fc_frame!r}")


class OverheadBoundViolation(InvariantBreach):

    def __init__(self, n_new, bound):
        self.n_new = n_new
        self.bound = bound
        super().__init__(f"Compiled entangling count {n_new} exceeds the relational overhead bound {bound}")
