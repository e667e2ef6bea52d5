"""Exception types shared across the package."""


class LittlewoodError(Exception):
    """Base class for all domain errors."""


class ScaleError(LittlewoodError):
    """An input exceeds the configured desk-scale bounds."""


class StableRangeError(LittlewoodError):
    """A branching rule was requested outside its range of validity."""


class NotCharacterError(LittlewoodError):
    """A weight multiset is not a nonnegative combination of irreducible characters."""


class InconsistencyError(LittlewoodError):
    """An internal exactness check failed; results would be unreliable."""
