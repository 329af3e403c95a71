"""Exception types raised by the library."""


class BsatoError(Exception):
    """Base class for all library errors."""


class NonRationalFactor(BsatoError):
    """A polynomial that should split over Q kept a factor with no rational root."""


class ZeroEliminationIdeal(BsatoError):
    """The elimination ideal has no nonzero univariate element."""


class EmptyInput(BsatoError, ValueError):
    pass


class NotPointed(BsatoError, ValueError):
    """The cone contains a line."""


class BadShiftSum(BsatoError, ValueError):
    pass


class NonPositiveCoordinate(BsatoError, ValueError):
    pass


class InvalidInput(BsatoError, ValueError):
    """Malformed exponent data or command arguments."""
