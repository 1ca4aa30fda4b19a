"""Exception hierarchy shared by every module of the package."""


class TuranError(ValueError):
    """Base class; carries a short machine-friendly name via ``type(e).__name__``."""


class IndexOutOfRange(TuranError):
    pass


class EdgeArityNot4(TuranError):
    pass


class ParseError(TuranError):
    pass


class TooLargeForBruteForce(TuranError):
    pass


class VariantOutOfRange(TuranError):
    pass


class InvalidCriticalSet(TuranError):
    pass


class DFlagUnjustified(TuranError):
    pass


class PartitionMismatch(TuranError):
    pass


class HypothesisViolated(TuranError):
    pass


class DepthTooLargeToMaterialize(TuranError):
    pass


class LambdaOutOfRange(TuranError):
    pass


class MTooSmall(TuranError):
    pass


class InvariantViolated(TuranError):
    pass


class UncertifiedAlpha(TuranError):
    pass


class MissingBaseEntry(TuranError):
    pass


class RatioOutOfRange(TuranError):
    pass


class NonPositiveWeight(TuranError):
    pass


class UnknownConstruction(TuranError):
    pass
