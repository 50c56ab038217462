"""Exception hierarchy shared by every module."""

from __future__ import annotations


class EgyptFracError(Exception):
    """Base class for all library errors."""


class DomainError(EgyptFracError, ValueError):
    """An argument lies outside the set an operation is defined on."""


class PreconditionError(EgyptFracError, ValueError):
    """Operands violate a structural precondition (e.g. overlapping support)."""


class NotFinitelyRepresentableError(DomainError):
    """A value has no finite expansion in the requested base."""


class ParseError(EgyptFracError, ValueError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class ResourceLimitError(EgyptFracError, RuntimeError):
    """A configured guard (cell count, iteration cap, enumeration size) was hit.

    ``partial`` carries whatever state had been reached, when there is any.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
