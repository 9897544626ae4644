"""Typed exceptions shared by every revlin module."""


class RevlinError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RevlinError):
    """Input text or JSON does not match the documented grammar."""


class DomainMismatchError(RevlinError):
    """An entry or operand violates its scalar-domain tag (R, C or H)."""


class ShapeMismatchError(RevlinError):
    """Matrix shapes are incompatible with the requested operation."""


class SingularMatrixError(RevlinError):
    """The matrix has no inverse."""


class RepresentativeOutsideQiError(RevlinError):
    """The quaternion's similarity class has no Gaussian-rational representative.

    Happens exactly when b^2 + c^2 + d^2 is not the square of a rational.
    """


class NonSplittingSpectrumError(RevlinError):
    """Some eigenvalue lies outside Q(i), so no exact Jordan form exists here."""


class NotSimilarError(RevlinError):
    """The two matrices have different canonical forms."""


class SingularSpecError(RevlinError):
    """A group-level question was asked about a spectrum containing zero."""


class NotApplicableError(RevlinError):
    """The block or pair matches no constructive involution pattern."""


class PlanMismatchError(RevlinError):
    """The pairing plan does not fit the decomposition it was applied to."""


class CertificationFailedError(RevlinError):
    """An exact witness identity failed to hold."""

    def __init__(self, identity: str, message: str = ""):
        self.identity = identity
        super().__init__(message or f"identity violated: {identity}")
