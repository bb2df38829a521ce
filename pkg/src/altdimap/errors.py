"""Exception types. Each carries the offending item where one exists."""

from __future__ import annotations


class DimapError(Exception):
    """Base class for every library error."""


class InputError(DimapError):
    """Malformed or invalid input (CLI exit code 1)."""


class ValidationError(InputError):
    def __init__(self, item, message: str | None = None):
        self.item = item
        super().__init__(message or f"{type(self).__name__}: {item}")


class AlternationViolation(ValidationError):
    pass


class DanglingHalfEdge(ValidationError):
    pass


class DuplicateSlot(ValidationError):
    pass


class IsolatedVertex(ValidationError):
    pass


class OddDegree(ValidationError):
    pass


class ProductNotIdentity(InputError):
    pass


class FormatError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NonIntegerGenus(DimapError):
    """Raised only if the representation is internally inconsistent."""


class MultiSemiloop(DimapError):
    def __init__(self, edge, flags=()):
        self.edge = edge
        self.flags = tuple(flags)
        super().__init__(f"edge {edge} is a proper semiloop of several types: {', '.join(self.flags)}")


class NotSuccessorPair(InputError):
    pass


class FaceOfSizeOne(DimapError):
    pass


class SymbolicEntry(DimapError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"parameter {name} is symbolic; a number is required")


class SizeBoundExceeded(DimapError):
    pass


class PreconditionError(DimapError):
    """A documented precondition does not hold (CLI exit code 3)."""


class ConditionsViolated(PreconditionError):
    def __init__(self, failing):
        self.failing = tuple(failing)
        super().__init__(f"parameter identities fail: {', '.join(self.failing)}")


class RegimeConstraintViolated(PreconditionError):
    def __init__(self, regime: str, constraint: str):
        self.regime = regime
        self.constraint = constraint
        super().__init__(f"regime {regime}: constraint {constraint} fails")


class NoMatchingRegime(PreconditionError):
    pass


class NotCAlternating(PreconditionError):
    pass


class DifferentComponents(PreconditionError):
    pass


class ClockwiseCorner(PreconditionError):
    pass


class NotWellDefined(DimapError):
    """Different edge orderings give different values (CLI exit code 2)."""

    def __init__(self, witnesses):
        self.witnesses = witnesses
        super().__init__("value depends on the edge ordering")


class NotFound(DimapError):
    pass
