"""Exception hierarchy.

Every error raised on bad input derives from :class:`RevlexError`, which is a
``ValueError`` so callers that only care about "bad argument" can catch that.
"""


class RevlexError(ValueError):
    pass


class DimensionMismatchError(RevlexError):
    """Two vectors (or a vector and a polytope) disagree on length."""


class OutOfRangeError(RevlexError):
    """A number does not fit the requested bit length or supported envelope."""


class EmptyPolytopeError(RevlexError):
    """n = 0 / v = 0: the revlex-initial set is empty."""


class MembershipError(RevlexError):
    """A 0/1 point is not a vertex of the polytope it was used with."""


class NotFullDimensionalError(RevlexError):
    """An operation that needs a full-dimensional polytope got a flat one."""


class AdmissibilityError(RevlexError):
    """(d, n) outside the pyramid range d+1 <= n <= 2^d."""


class CapacityError(RevlexError):
    """Requested work exceeds a configured enumeration cap."""


class InvalidInequalityError(RevlexError):
    """An inequality is violated by some vertex, so it cannot define a face."""
