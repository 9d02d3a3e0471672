"""Exception hierarchy shared by the library and the CLI."""
from typing import Any, List, Optional


class MultinetError(Exception):
    """Base class for every error raised by this package."""


class TableParseError(MultinetError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SubsquareError(MultinetError, ValueError):
    """The given triple is not a subsquare of the quasigroup."""


class IncidenceError(MultinetError, ValueError):
    """Malformed incidence structure or unsupported multinet shape."""


class InvariantViolation(MultinetError):
    """A structural invariant failed; the input or a computation is corrupted."""


class ClassificationError(MultinetError):
    """Two classes collided on their identifying key."""


class ScopeError(MultinetError):
    """The request is outside what this toolkit computes."""


class BudgetExceeded(MultinetError):
    """A Groebner basis computation ran out of its time or reduction budget.

    ``partial`` holds the basis elements known when the budget ran out and
    ``pending`` the number of critical pairs left unprocessed.
    """

    def __init__(self, message: str, partial: Optional[List[Any]] = None, pending: int = 0):
        super().__init__(message)
        self.partial = list(partial or [])
        self.pending = pending


class PartialResultError(MultinetError):
    """Minimal prime extraction stopped before every branch was finished."""

    def __init__(self, message: str, finished: List[Any], unfinished: List[Any]):
        super().__init__(message)
        self.finished = finished
        self.unfinished = unfinished
