"""Exception types raised across the package."""


class NPotentError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(NPotentError, ValueError):
    pass


class SingularMatrix(NPotentError):
    pass


class NotNPotent(NPotentError):
    """Raised when an operator has to be certified but fails the potency test."""


class NearSpectrum(NPotentError):
    """A resolvent evaluation point or contour gets too close to the spectrum."""


class IndexOutOfRange(NPotentError, IndexError):
    pass


class OrderMismatch(NPotentError, ValueError):
    pass


class VerificationFailed(NPotentError):
    """A computed residual exceeded its bound.

    The offending quantity is kept on the exception so callers can report it.
    """

    def __init__(self, what, residual, bound):
        self.what = what
        self.residual = float(residual)
        self.bound = float(bound)
        super().__init__(f"{what} residual {self.residual:.3e} exceeds {self.bound:.3e}")


class UnknownEigenvalue(NPotentError, KeyError):
    pass


class NotApplicable(NPotentError):
    pass


class DegenerateRange(NPotentError):
    pass


class TooManyEigenvalues(NPotentError):
    pass


class UnsatisfiableConditioning(NPotentError):
    pass


class ParseError(NPotentError, ValueError):
    pass
