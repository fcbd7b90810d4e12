"""Exception hierarchy shared by every module of the package."""


class UmbralError(ValueError):
    """Base class for all errors raised by :mod:`umbral`."""


class FlavorMismatch(UmbralError):
    pass


class NonUnitConstantTerm(UmbralError):
    pass


class NonzeroInnerConstant(UmbralError):
    pass


class SemigroupMismatch(UmbralError):
    pass


class ElementOutOfBounds(UmbralError):
    pass


class SupportTooLarge(UmbralError):
    """A finitely supported function does not fit inside the carrier bound."""


class ReproducingCheckFailed(UmbralError):
    pass


class InsufficientMoments(UmbralError):
    pass


class DegreeOverflow(UmbralError):
    pass


class NotADeltaOperator(UmbralError):
    pass


class NotShiftInvariant(UmbralError):
    pass


class ReconstructionFailed(UmbralError):
    pass


class ZeroDiagonal(UmbralError):
    pass


class UnsupportedKernelShape(UmbralError):
    pass


class PosetMismatch(UmbralError):
    pass


class InvalidPoset(UmbralError):
    pass


class UnknownUmbra(UmbralError):
    pass


class NonpositiveScale(UmbralError):
    pass
