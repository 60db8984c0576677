"""Exception hierarchy.

Every error carries an integer ``code`` that the command line maps onto
its exit status.
"""


class WienerLabError(Exception):
    code = 4


class UsageError(WienerLabError, ValueError):
    """Malformed input or a request outside configured limits."""

    code = 2


class TreeValidationError(UsageError):
    """An edge list that does not describe a tree.

    ``reason`` is a short machine-readable tag for the first violation found
    (``"cycle"``, ``"disconnected"``, ``"self-loop"``, ...).
    """

    def __init__(self, reason, detail=""):
        self.reason = reason
        self.detail = detail
        msg = reason if not detail else f"{reason}: {detail}"
        super().__init__(msg)


class CeilingError(UsageError):
    """Enumeration requested above the configured order ceiling."""


class InvariantViolation(WienerLabError):
    """Two routes that must agree did not."""

    code = 3


class DomainError(WienerLabError, ValueError):
    """Valid input for which the requested object does not exist."""

    code = 4


class StaleContextError(DomainError):
    """A special-vertex context that does not belong to the given tree."""
