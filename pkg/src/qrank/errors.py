"""Exception hierarchy shared by every layer of the package."""


class QRankError(Exception):
    """Base class for all package errors."""


class RingMismatchError(QRankError, TypeError):
    """Operands live in incompatible coefficient rings."""


class NotInvertibleError(QRankError, ZeroDivisionError):
    """A required inverse does not exist in the coefficient ring."""


class PrecisionError(QRankError):
    """A coefficient was requested beyond the known truncation order."""


class NonGenericError(QRankError):
    """A specialization hit a pole or a theta-function zero."""


class BoundError(QRankError):
    """A lattice or sum enumeration bound failed its boundary assertion."""


class DivergentError(QRankError):
    """A product or sum has no well-defined formal q-expansion."""
