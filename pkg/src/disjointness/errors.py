"""Exception types shared across the toolkit."""


class DisjointnessError(Exception):
    """Base class for all toolkit errors."""


class GeneralPositionError(DisjointnessError):
    """The point set violates a general-position requirement."""


class DuplicatePointError(GeneralPositionError):
    def __init__(self, i, j):
        self.indices = (i, j)
        super().__init__(f"duplicate points at indices {i} and {j}")


class CollinearTripleError(GeneralPositionError):
    def __init__(self, i, j, k):
        self.indices = (i, j, k)
        super().__init__(f"collinear triple at indices {i}, {j}, {k}")


class DegenerateOverlapError(DisjointnessError):
    """Segments overlap or touch collinearly: the input was never validated."""


class TiedAngleError(DisjointnessError):
    """Two points are collinear with the radial-order center."""


class ParseError(DisjointnessError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotDistanceTwoError(DisjointnessError):
    """The pair (a, b) is not at distance 2 in D(P)."""

    def __init__(self, message, distance=None):
        self.distance = distance
        super().__init__(message)


class DisjointSegmentsError(NotDistanceTwoError):
    """a and b are disjoint, hence adjacent in D(P) (distance 1)."""


class PreconditionError(DisjointnessError):
    """A documented precondition of the operation does not hold."""


class NotInDomainError(DisjointnessError):
    """The segment is outside the domain A' of the pairing map."""


class SearchExhaustedError(DisjointnessError):
    """The parametric search for derived points ran out of candidates.

    Carries the offending point set so the instance can be archived.
    """

    def __init__(self, message, specimen=None):
        self.specimen = specimen
        super().__init__(message)


class CollectionTooSmallError(DisjointnessError):
    """A constructed path collection fell below its guaranteed size."""

    def __init__(self, message, got=None, needed=None, diagnostics=None):
        self.got = got
        self.needed = needed
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class VerificationError(DisjointnessError):
    """A constructed certificate failed re-verification."""


class NoDistanceTwoPairError(DisjointnessError):
    """The graph has no pair of vertices at distance exactly 2."""


class RejectionBudgetError(DisjointnessError):
    """Rejection sampling exceeded its retry budget."""
