"""Exception types shared across the package."""


class TsirelsonError(Exception):
    """Base class for all errors raised by this package."""


class EmptyMatrix(TsirelsonError):
    pass


class NonFiniteEntry(TsirelsonError):
    pass


class InvalidSize(TsirelsonError):
    pass


class LengthMismatch(TsirelsonError):
    pass


class NotPSD(TsirelsonError):
    pass


class NoConvergence(TsirelsonError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class InvalidRank(TsirelsonError):
    pass


class MaxIterReached(TsirelsonError):
    """Sweep cap hit before the displacement tolerance.

    Carries the partial solution; certification of the dual still yields a
    valid upper bound, so callers may recover.
    """

    def __init__(self, message, solution):
        super().__init__(message)
        self.solution = solution


class TooLarge(TsirelsonError):
    pass


class NotUnitVector(TsirelsonError):
    pass


class DimensionMismatch(TsirelsonError):
    pass


class SettingCountMismatch(TsirelsonError):
    pass
