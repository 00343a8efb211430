"""Exception hierarchy shared by every module."""


class WmiError(Exception):
    """Base class for all errors raised by wmideals."""


class InvalidInput(WmiError, ValueError):
    pass


class DimensionMismatch(InvalidInput):
    pass


class NotApplicable(InvalidInput):
    """A rule was asked about inputs outside the regime where it is derived."""


class InvalidConfiguration(InvalidInput):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid SNC configuration: {lines}")


class InsufficientHodgeData(WmiError):
    """The requested Hodge number needs pullback matrices that were not supplied."""

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class LcInconsistent(WmiError):
    """C-dimensions contradict the assumption that the pair is log-canonical."""
