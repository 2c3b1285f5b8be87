"""Exception types shared across the package."""


class HopfBraidError(Exception):
    """Base class for all errors raised by hopfbraid."""


class FieldMismatch(HopfBraidError):
    pass


class SingularMatrix(HopfBraidError):
    pass


class DimensionMismatch(HopfBraidError):
    pass


class InvalidAlgebra(HopfBraidError):
    """Raised when structure tensors fail the Hopf axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class IntegralSpaceNotOneDimensional(HopfBraidError):
    pass


class UnsupportedSpec(HopfBraidError):
    pass


class RootOrderMismatch(HopfBraidError):
    pass


class InverseCheckFailed(HopfBraidError):
    pass


class NotIsomorphism(HopfBraidError):
    pass


class NotHopfMap(HopfBraidError):
    pass


class NotAlgebraMap(HopfBraidError):
    pass


class AlgebraMismatch(HopfBraidError):
    pass


class ParseError(HopfBraidError):
    pass


class LetterOutOfRange(ParseError):
    pass


class ZeroLetter(ParseError):
    pass


class BadParameter(HopfBraidError):
    pass


class ClosedFormMismatch(HopfBraidError):
    """The iterated categorical trace disagreed with the Drinfeld-element formula.

    This always indicates a bug.
    """


class LengthMismatch(HopfBraidError):
    pass


class EnumerationTooLarge(HopfBraidError):
    pass


class ResourceLimitExceeded(HopfBraidError):
    pass


class SchemaError(HopfBraidError):
    def __init__(self, pointer, message):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer
