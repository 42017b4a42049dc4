"""Shared error types for the algebra layer."""


class EpsPoleError(ArithmeticError):
    """A denominator vanishes at e1 = e2 = 0, so the limit does not exist."""


class WindowError(LookupError):
    """A coefficient was requested outside a series' truncation window."""


class TruncationMismatchError(ValueError):
    """Two series with incompatible truncation windows were combined."""
