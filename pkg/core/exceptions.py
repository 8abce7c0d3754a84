class QrfException(Exception):
    """Base error; mirrors the status_code/detail shape of an API exception with a CLI exit code."""

    exit_code = 2
    default_detail = "The request could not be processed"

    def __init__(self, detail=None):
        self.detail = detail if detail is not None else self.default_detail
        super().__init__(self.detail)

    def __str__(self):
        return str(self.detail)


class UserError(QrfException):
    exit_code = 2
    default_detail = "Invalid input"


class InvariantBreach(QrfException):
    exit_code = 3
    default_detail = "An internal invariant was violated"


class InvalidConfigError(UserError):

    def __init__(self, option, value, reason):
        self.option = option
        super().__init__(f"Invalid value for --{option}: {value!r} ({reason})")


class VerificationFailedError(InvariantBreach):

    def __init__(self, failures):
        self.failures = failures
        super().__init__("Verification failed: " + ", ".join(failures))
