"""Shared exception types.

Kept in one place so the CLI can map each failure category to a distinct
machine-readable error code.
"""

__all__ = ["NotApplicableError", "BudgetExceededError"]


class NotApplicableError(ValueError):
    """A bound variant was queried outside its validity window."""


class BudgetExceededError(RuntimeError):
    """An exact computation exceeded its enumeration budget.

    For searches the exception carries the best incumbent found so far in
    ``result`` (with ``proven_optimal`` False); for hard size limits the
    attribute stays None.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
