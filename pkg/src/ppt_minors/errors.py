"""Exception types raised by the library."""


class NonFiniteEntry(ValueError):
    """A matrix entry is NaN or infinite."""


class DensityMatrixError(ValueError):
    """Base class for violated density-matrix axioms."""


class NotHermitian(DensityMatrixError):
    pass


class TraceNotOne(DensityMatrixError):
    pass


class NotPSD(DensityMatrixError):
    pass


class ResidualTooLarge(ArithmeticError):
    """A polished quartic root does not satisfy the polynomial."""


class NoConvergence(ArithmeticError):
    """The Jacobi eigensolver ran out of sweeps."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class CrossCheckError(ArithmeticError):
    """Two independent routes to the same quantity disagree."""
