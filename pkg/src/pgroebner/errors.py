"""Exception hierarchy shared by all pgroebner modules."""


class PGroebnerError(Exception):
    """Base class for all library errors."""


class MixedRings(PGroebnerError):
    """Operands belong to different residue rings."""


class NotAUnit(PGroebnerError):
    """Inversion was requested for a zero divisor."""


class DimensionMismatch(PGroebnerError):
    """Vector operands have different ambient dimensions."""


class ZeroVector(PGroebnerError):
    """Leading data was requested for the zero vector."""


class NotReducible(PGroebnerError):
    """The leading term cannot be cancelled by the given reducers."""


class IterationLimitExceeded(PGroebnerError):
    """The completion loop hit its safety cap; indicates a bug, not expected behavior."""


class RingNotField(PGroebnerError):
    """A field-only check was invoked with exponent r > 1."""


class ValidationFailed(PGroebnerError):
    """A constructed object failed its structural self-check."""


class NotInModule(PGroebnerError):
    """The vector is not a digit-coefficient combination of the given sequence."""


class PivotNotUnique(PGroebnerError):
    """Zero or several candidate vectors have leading position 1 and full order."""


class EnumerationTooLarge(PGroebnerError):
    """An exhaustive enumeration would exceed the configured cap."""


class ParseError(PGroebnerError):
    """Malformed polynomial, vector, matrix, or document text."""
