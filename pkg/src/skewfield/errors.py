"""Exception hierarchy shared by all skewfield modules.

Class names match the error names used in the operation contracts, so tests
and CLI exit paths can refer to them directly.
"""


class SkewfieldError(Exception):
    """Base class for every error raised by this package."""


class BadParams(SkewfieldError):
    """Invalid construction parameters (bad prime, bad modulus, 0x0 matrix, ...)."""


class ZeroInverse(SkewfieldError):
    """Multiplicative inverse of the zero scalar was requested."""


class NonSquare(SkewfieldError):
    """A square-only matrix operation was applied to a rectangular matrix."""


class Singular(SkewfieldError):
    """Matrix inversion failed because the determinant is zero."""


class ContextMismatch(SkewfieldError):
    """Operands live in different ring contexts and cannot be combined."""


class DescriptorMismatch(ContextMismatch):
    """Operands carry different field or algebra descriptors."""


class ShapeMismatch(ContextMismatch):
    """Matrix operands have incompatible shapes."""


class NotInvertible(SkewfieldError):
    """An element (input or word intermediate) has no inverse in its context."""


class NotADivisionPreset(SkewfieldError):
    """Operation requires an algebra declared as a division algebra with a degree."""


class DepthCap(SkewfieldError):
    """Word depth exceeds the configured evaluation cap."""


class DepthArityCap(SkewfieldError):
    """Decomposition depth exceeds the configured factor-count cap."""


class ArityMismatch(SkewfieldError):
    """Wrong number of inputs for a word of the requested depth."""


class BadTrace(SkewfieldError):
    """Additive decomposition requires a trace-zero target."""


class CharTooSmall(SkewfieldError):
    """Field characteristic is positive and not larger than the matrix size."""


class ScalarInput(SkewfieldError):
    """Multiplicative decomposition requires a non-scalar target."""


class BadDeterminant(SkewfieldError):
    """Multiplicative decomposition requires a determinant-one target."""


class SmallField(SkewfieldError):
    """Operation requires an infinite base field."""


class DegenerateChoiceExhausted(SkewfieldError):
    """All retried eigenvalue tuples hit a degenerate configuration."""


class ParseError(SkewfieldError):
    """Expression text could not be parsed.

    Carries the 0-based position of the offending token and the set of
    token descriptions that would have been accepted there.
    """

    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.expected = tuple(expected)


class UnboundVariable(SkewfieldError):
    """Expression evaluation found a variable missing from the environment."""


class NoPermissibleSamples(SkewfieldError):
    """Every sampled substitution of an identity-test run was non-permissible."""
