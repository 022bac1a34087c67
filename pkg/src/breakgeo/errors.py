"""Exception types shared across the package.

Every rejected input names the offending token or bound so callers (and the
CLI/service error mappers) can report something actionable.
"""


class BreakgeoError(Exception):
    """Base class for all domain errors raised by this package."""


class DuplicateValue(BreakgeoError):
    """A value appears more than once where a bijection/disjointness is required."""


class OutOfRange(BreakgeoError):
    """A token is not a valid value in [1..n]."""


class TooShort(BreakgeoError):
    """Fewer than two elements where at least one adjacency is required."""


class SizeMismatch(BreakgeoError):
    """Operands live on symmetric groups of different sizes."""


class NotContained(BreakgeoError):
    """An adjacency set is not contained where the operation requires it."""


class InvalidRange(BreakgeoError):
    """Numeric parameters outside the operation's admissible range."""


class TooLarge(BreakgeoError):
    """An exhaustive operation was asked to run beyond its configured bound."""
