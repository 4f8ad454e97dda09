"""Exception hierarchy shared by all resum modules."""


class ResumError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(ResumError):
    """A gamma-function argument landed on a non-positive integer."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DomainError(ResumError):
    """An input is outside the mathematical domain of the operation."""


class UndefinedError(ResumError):
    """The quantity is undefined at the requested point (pole, complex
    intermediate, or similar); scanners treat this as a gap."""


class NoDefinedPointError(ResumError):
    """The target function is undefined on every point of the scan grid."""


class ZeroLeadingCoefficientError(ResumError):
    """The leading series coefficient is zero where it must not be."""


class DegenerateOrderError(ResumError):
    """A root-approximant parameter cannot be determined because its
    affine coefficient vanishes at that order."""


class ComplexValueError(ResumError):
    """A non-integer power of a non-positive base was encountered."""


class UnsupportedKindError(ResumError):
    """The operation is not available for this transform kind."""


class EmptySolutionSetError(ResumError):
    """A selection criterion was applied to an empty solution list."""


class ZeroReferenceCoefficientError(ResumError):
    """A reference coefficient used as a denominator is zero."""
