"""Exception types shared across the package."""

from __future__ import annotations


class PoiscompatError(Exception):
    """Base class for all package errors."""


class ParseError(PoiscompatError):
    """Expression text violates the grammar.

    `offset` is the byte offset of the offending token in the input.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnknownIdentifierError(ParseError):
    pass


class MalformedExponentError(ParseError):
    pass


class EvalDomainError(PoiscompatError):
    """Evaluation left the field's validity domain.

    Carries the offending subexpression and the point at which the
    violation happened.
    """

    def __init__(self, reason: str, subexpression, point):
        self.reason = reason
        self.subexpression = subexpression
        self.point = tuple(point)
        super().__init__(f"{reason} in '{subexpression}' at {self.point}")


class ConstraintError(PoiscompatError):
    """A precondition on operation arguments is violated."""


class NotClosedError(PoiscompatError):
    """Bivector has no potential: the associated 1-form is not closed.

    `residuals` holds the three divergence-residual fields.
    """

    def __init__(self, message: str, residuals):
        super().__init__(message)
        self.residuals = residuals


class QuadratureDomainError(PoiscompatError):
    """Line-integral reconstruction hit a domain violation on the segment."""
