"""Exception taxonomy shared across the package.

Two broad families matter to callers: bad inputs (parameter or domain
violations, detectable before any numerics run) and numerical failures
(an algorithm ran and could not meet its tolerance contract). The CLI
maps the first family to exit code 2 and the second to exit code 3.
"""


class JanowskiError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(JanowskiError, ValueError):
    """A precondition on the inputs is violated."""


class DegenerateMapError(ParameterError):
    """Map parameters collapse the geometry (A = B, A = -b, and similar)."""


class PoleOnBoundaryError(ParameterError):
    """The requested circle passes through the pole of the first-order map."""


class BranchUndefinedError(ParameterError):
    """A power or argument is requested where no continuous branch exists.

    Raised when the origin is interior to the first-order image, so the
    image loops around 0 and no single-valued power can be anchored at 1.
    """


class OutOfRangeError(ParameterError):
    """A scalar parameter falls outside its admissible interval."""


class NegativeRealPartError(ParameterError):
    """A weight function fails the positive-real-part requirement."""


class ConditionFailedError(ParameterError):
    """A hypothesis inequality fails; carries the offending excess."""

    def __init__(self, message: str, excess: float = 0.0):
        super().__init__(message)
        self.excess = excess


class InvalidTheoremIdError(ParameterError):
    """Unknown trial identifier passed to the implication oracle."""


class NonCaratheodoryLambdaError(ParameterError):
    """A weight must have positive real part and value 1 at the origin."""


class NumericalError(JanowskiError):
    """An algorithm could not meet its accuracy contract."""


class NoBracketError(NumericalError):
    """A sign-change scan found no bracket for a root."""


class NoRootError(NumericalError):
    """A bracketed solve has no root in the admissible interval."""


class NoConvergenceError(NumericalError):
    """A series or iteration exceeded its term/iteration budget."""


class QuadratureFailureError(NumericalError):
    """Adaptive quadrature hit its subdivision cap before the tolerance."""
