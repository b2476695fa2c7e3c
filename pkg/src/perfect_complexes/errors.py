"""Exception hierarchy shared by the toolkit."""

from __future__ import annotations


class ComplexToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class RingMismatchError(ComplexToolkitError, ValueError):
    """Operands or matrices belong to different rings."""


class NotAUnitError(ComplexToolkitError, ArithmeticError):
    """An inverse was requested for a non-unit."""


class UnsupportedRingError(ComplexToolkitError, ValueError):
    """The operation needs a ring class the input does not belong to."""

    def __init__(self, operation: str, required: str, ring: object) -> None:
        super().__init__(f"{operation} requires {required}; got {ring}")
        self.operation = operation
        self.required = required
        self.ring = ring


class ValuationError(ComplexToolkitError, ValueError):
    """A leading form was requested below the valuation of an element."""


class InvalidComplexError(ComplexToolkitError, ValueError):
    """A complex violates shape consistency or d∘d = 0."""

    def __init__(self, violation: object) -> None:
        super().__init__(f"invalid complex: {violation}")
        self.violation = violation


class ChainMapError(ComplexToolkitError, ValueError):
    """Degreewise matrices do not commute with the differentials."""

    def __init__(self, degree: int, detail: str) -> None:
        super().__init__(f"not a chain map at degree {degree}: {detail}")
        self.degree = degree


class ShapeMismatchError(ComplexToolkitError, ValueError):
    """A certificate or matrix does not fit the complex it is applied to."""


class FactorizationUnsupportedError(ComplexToolkitError):
    """Primary refinement is refused for rings without supported factorisation."""


class ParseError(ComplexToolkitError, ValueError):
    """Malformed JSON document or grammar input."""
