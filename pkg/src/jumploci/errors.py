"""Exception hierarchy shared by all jumploci modules."""


class JumpLociError(ValueError):
    """Base class for input and precondition errors."""


class NotAFace(JumpLociError):
    pass


class UnknownVertex(JumpLociError):
    pass


class ArityMismatch(JumpLociError):
    pass


class OverlappingVertexSets(JumpLociError):
    pass


class VoidComplex(JumpLociError):
    """Raised when an operation needs at least the empty face."""


class NotAComplex(JumpLociError):
    """Consecutive differentials do not compose to zero."""


class PreconditionNotCertified(JumpLociError):
    pass


class IntegerCoefficientsUnsupported(JumpLociError):
    pass


class LengthMismatch(JumpLociError):
    pass


class NotAcyclic(JumpLociError):
    pass


class VertexBudgetExceeded(JumpLociError):
    pass


class NotCentral(JumpLociError):
    pass


class NotEssential(JumpLociError):
    pass


class NotProjectivePoint(JumpLociError):
    pass


class InvalidCharacter(JumpLociError):
    pass


class NegativeEulerCharacteristic(UserWarning):
    """Soft failure: the check runs, but outside the hypothesis chi >= 0."""
