"""Exception hierarchy shared by all subpackages."""


class SelChabError(Exception):
    """Base class for every error raised by this package."""


class PrecisionError(SelChabError):
    """A quantity could not be certified at the working precision.

    Callers that follow the retry contract catch this, double the working
    precision and try again.
    """


class PrecisionExhausted(PrecisionError):
    pass


class InsufficientPrecision(PrecisionError):
    pass


class IndistinguishableFromZero(PrecisionError):
    pass


class DivisionByIndistinguishableZero(PrecisionError, ZeroDivisionError):
    pass


class NotASquare(SelChabError, ValueError):
    pass


class NotFullRank(SelChabError):
    pass


class NotSquarefreeMod2(SelChabError, ValueError):
    pass


class NotAUnit(SelChabError, ValueError):
    pass


class InternalInconsistency(SelChabError):
    """A mathematical invariant failed; indicates a bug or a bad input."""


class DegreeTooLarge(SelChabError, ValueError):
    pass


class EvenH0(SelChabError, ValueError):
    pass


class RankDrop(SelChabError):
    pass


class NotInLocalImage(SelChabError):
    pass


class ScanBudgetExceeded(SelChabError):
    pass


class IndexOutOfRange(SelChabError, ValueError):
    pass


class ResultantNotUnit(SelChabError):
    pass


class OddDegree(SelChabError, ValueError):
    pass


class NotMonic(SelChabError, ValueError):
    pass


class InputError(SelChabError, ValueError):
    """Malformed user input (polynomial strings, Selmer files, presets)."""
