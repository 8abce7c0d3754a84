import structlog
from django.core.management.base import CommandError
from rest_framework.exceptions import ValidationError

from core.exceptions import InvariantBreach, QrfException, UserError

logger = structlog.get_logger(__name__)

USER_ERROR = 2
INTERNAL_ERROR = 3


def _validation_message(detail):
    if isinstance(detail, dict):
        return "; ".join(f"{key}: {_validation_message(value)}" for key, value in detail.items())
    if isinstance(detail, list):
        return ", ".join(_validation_message(item) for item in detail)
    return str(detail)


def custom_exception_handler(exc, command=None):
    """Turn anything raised by a command into a CommandError carrying the exit code."""

    if isinstance(exc, CommandError):
        return exc
    if isinstance(exc, UserError):
        pass
    elif isinstance(exc, (ValidationError, OSError)):
        pass
    elif isinstance(exc, InvariantBreach):
        logger.error("Invariant breach", command=command, detail=str(exc))
    else:
        logger.error(exc, command=command, exc_info=True)

    if isinstance(exc, QrfException):
        return CommandError(exc.detail, returncode=exc.exit_code)
    if isinstance(exc, ValidationError):
        return CommandError(_validation_message(exc.detail), returncode=USER_ERROR)
    if isinstance(exc, OSError):
        return CommandError(str(exc), returncode=USER_ERROR)
    return CommandError(f"Internal error: {exc}", returncode=INTERNAL_ERROR)
