"""Exception hierarchy shared by all qgrank modules."""


class QGRankError(Exception):
    """Base class for domain errors (CLI exit code 2)."""


class InvalidLieType(QGRankError, ValueError):
    pass


class InvalidParity(QGRankError, ValueError):
    """ell_m = 1 requested for a simply-laced type."""


class DegenerateLevel(QGRankError, ValueError):
    """The level is too small: the alcove is empty."""

    def __init__(self, message, ell0=None):
        super().__init__(message)
        self.ell0 = ell0


class ParityMismatch(QGRankError, ValueError):
    pass


class NonUnitDenominator(QGRankError, ValueError):
    pass


class MethodDisagreement(QGRankError, RuntimeError):
    """Generating-function and enumeration ranks differ (a bug, never data)."""


class IndivisibleRank(QGRankError, RuntimeError):
    pass
