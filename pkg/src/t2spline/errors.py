"""Exception types raised across the package.

All domain errors derive from :class:`T2SplineError`, which itself derives
from ``ValueError`` so that generic callers can catch one thing.  Plain file
I/O failures are left to the builtin ``OSError``.
"""


class T2SplineError(ValueError):
    """Base class for every validation or domain error raised here."""


class OrderingViolation(T2SplineError):
    """The seven-value ordering ll <= l <= rl <= c <= lr <= r <= rr failed."""

    def __init__(self, lo_name: str, lo: float, hi_name: str, hi: float):
        self.pair = (lo_name, hi_name)
        super().__init__(f"ordering violated: {lo_name} > {hi_name} ({lo!r} > {hi!r})")


class HeightOutOfRange(T2SplineError):
    """Lower-membership height h must lie in (0, 1]."""


class NegativeSpread(T2SplineError):
    """Spreads must be non-negative."""


class SpreadOrderViolation(T2SplineError):
    """Per side, inner <= principal <= outer must hold for spreads."""


class AlphaOutOfRange(T2SplineError):
    """Cut level alpha must lie in [0, 1)."""


class OrderExceedsControlCount(T2SplineError):
    """A curve of order k needs at least k control points."""


class ParameterOutOfDomain(T2SplineError):
    """Curve parameter t lies outside the knot-vector domain."""


class TooFewSamples(T2SplineError):
    """Curve sampling needs at least two parameter values."""


class SampleMismatch(T2SplineError):
    """Polylines were sampled at different parameters and cannot be compared."""


class ParseError(T2SplineError):
    """A model document could not be parsed; carries the text position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ValidationError(T2SplineError):
    """A parsed model document violates an invariant; names point and field."""
