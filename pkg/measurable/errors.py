"""
Error types for the measurable-function-ring library.
Every failure raised by the library derives from MeasurableError so callers
(the CLI and the HTTP routes) can map them onto exit codes and status codes.
"""

from typing import Optional


class MeasurableError(Exception):
    """Base class for all library errors."""


class InputError(MeasurableError):
    """Caller supplied something malformed; CLI exit code 2, HTTP 400."""


class InputShapeError(InputError):
    """Width mismatch, bad ground size, duplicate labels, malformed values."""


class NotSigmaAlgebraError(InputShapeError):
    """A family of subsets failed the sigma-algebra closure invariants."""


class MembershipError(InputError):
    """A subset is not a member of the algebra, or a point label is unknown."""


class DocumentError(InputError):
    """A space description could not be parsed or validated."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class UnknownPropositionError(InputError):
    """A proposition filter named an id that is not registered."""


class MeasurabilityError(MeasurableError):
    """Function values are not constant on some atom."""

    def __init__(self, message: str, atom_labels=()):
        self.atom_labels = tuple(atom_labels)
        super().__init__(message)


class SpaceMismatchError(MeasurableError):
    """Two objects from different measurable spaces were combined."""


class NonUnitError(MeasurableError):
    """Inverse requested for a function with a nonempty zero-set."""


class ImproperError(MeasurableError):
    """A proper filter or ideal was required."""


class NotPrimeError(MeasurableError):
    """A prime element of the algebra was required."""


class NoExtensionError(MeasurableError):
    """A family without the finite intersection property cannot be extended."""


class ResourceCapError(MeasurableError):
    """An enumeration exceeded its configured cap; CLI exit code 3."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeds the enumeration cap of {cap}")


class InvariantViolation(MeasurableError):
    """Two independent computations of the same object disagreed."""
