"""Exception hierarchy shared by every module of the package."""


class SchubFockError(Exception):
    """Base class for all library errors."""


class BoundExceeded(SchubFockError):
    """An enumeration was asked to exceed its configured cap."""


class NotGrassmannian(SchubFockError):
    pass


class MalformedMaya(SchubFockError):
    pass


class NotReduced(SchubFockError):
    pass


class NotStrongRibbon(SchubFockError):
    pass


class SizeMismatch(SchubFockError):
    pass


class NonGrassmannianSupport(SchubFockError):
    """Raised when a Stanley operator applied to the identity leaves the Grassmannian span."""


class NonIntegralCoefficient(SchubFockError):
    pass


class NotContained(SchubFockError):
    pass


class NotSymmetric(SchubFockError):
    pass


class UnsupportedWindow(SchubFockError):
    pass


class NotInSNeq0(SchubFockError):
    pass


class NoConvergence(SchubFockError):
    pass


class ParseError(SchubFockError, ValueError):
    pass
