"""
Exception hierarchy for torarr.
The CLI maps InputError to exit code 2; everything else is a library error.
"""

from typing import Optional


class TorarrError(Exception):
    """Base class for all torarr errors."""


class InputError(TorarrError):
    """Bad user input: unreadable files, unknown names, exceeded guards."""


class MatrixParseError(InputError, ValueError):
    """Matrix file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardExceededError(InputError):
    """A size guard (subset count, generator count) would be exceeded."""

    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(
            f"{what} = {value} exceeds the limit {limit} (use --force or raise the limit)"
        )


class PreconditionError(TorarrError, ValueError):
    """An operation was called outside its domain."""


class AmbientMismatchError(PreconditionError):
    """Lattices or vectors live in different ambient spaces."""


class VariableMismatchError(PreconditionError):
    """Polynomials over different variable sets were combined."""


class NotHomogeneousError(PreconditionError):
    """A graded computation received a non-homogeneous polynomial."""


class ScanLimitError(TorarrError):
    """Hilbert function did not settle within the scan limit."""


class InvalidMatroidError(PreconditionError):
    """Polynomial specialization left negative powers of t."""

    def __init__(self, detail: str = ""):
        message = "not a valid (matroid, rank) pair"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class NotUnimodularError(PreconditionError):
    """Integral presentation requested for an arrangement with a disconnected intersection."""


class UnsupportedResonanceError(TorarrError):
    """Resonance variety has a component this engine does not extract."""


class UnresolvedResonanceError(TorarrError):
    """Fewer verified rational points than the scheme degree."""

    def __init__(self, found: int, degree: int):
        self.found = found
        self.degree = degree
        self.residual = degree - found
        super().__init__(
            f"unresolved resonance points: found {found} of degree {degree} "
            f"(residual degree {self.residual})"
        )


class NotDecomposableError(PreconditionError):
    """Plücker vector does not satisfy the Pfaffian quadrics."""


class CoveringError(PreconditionError):
    """Invalid covering parameters or lattice request."""
