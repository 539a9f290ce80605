"""Exception types shared across the library."""


class DeltaShellError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(DeltaShellError, ValueError):
    """An argument violates a documented precondition."""


class NonConvergence(DeltaShellError, ArithmeticError):
    """An iterative solver failed to reach its tolerance within its cap."""


class NoSuchPole(DeltaShellError, ValueError):
    """The requested pole does not exist for this potential strength."""


class PoleHit(DeltaShellError, ZeroDivisionError):
    """Evaluation requested at (or numerically on top of) an S-matrix pole."""


class DegeneratePole(DeltaShellError, ArithmeticError):
    """The Jost-function derivative vanishes at the pole (double pole)."""


class ToleranceNotMet(DeltaShellError, ArithmeticError):
    """Quadrature exhausted its budget before reaching the tolerance.

    The best value and its honest error estimate are attached so callers
    can still inspect the result.
    """

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
