"""Exception types shared across the package."""


class PrecisionError(ArithmeticError):
    """Base class for failures caused by finite p-adic precision."""


class InsufficientPrecision(PrecisionError):
    """A decision (valuation bound, pivot choice, rank) cannot be made from the known digits."""


class SingularToPrecision(PrecisionError):
    """A matrix is singular to the working precision."""


class DivisionByZero(ZeroDivisionError):
    pass


class DenominatorZero(ZeroDivisionError):
    pass


class ZeroArgument(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotUpperTriangular(ValueError):
    pass


class NotInBPlus(ValueError):
    pass


class CharacterNotAdmissible(ValueError):
    pass


class InvalidPreset(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass
