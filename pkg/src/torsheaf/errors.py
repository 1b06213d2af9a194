"""Exception types raised by the library."""


class TorsheafError(ValueError):
    """Base class for all domain errors."""


class NotInSpan(TorsheafError):
    """A class is not in the span of the requested basis."""


class NotNormalized(TorsheafError):
    """An operation needs 0 <= 2*chi <= mu."""


class NotApplicable(TorsheafError):
    """The operation needs Picard rank 2 (mu >= 3)."""


class NotOrthogonal(TorsheafError):
    """A class does not pair to zero against the sheaf class."""


class ZeroRank(TorsheafError):
    pass


class NotOneDimensional(TorsheafError):
    """Expected a class with ch0 == 0 and ch1 > 0."""


class ZeroCentralCharge(TorsheafError):
    pass


class InvariantViolation(AssertionError):
    """A cross-module consistency check failed. Always a bug."""
