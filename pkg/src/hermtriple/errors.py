"""Exception types shared across the package.

Two branches matter for the CLI: ``InputError`` maps to exit code 2 (bad
arguments, files, or configuration), ``NumericalError`` maps to exit code 3
(a numerical procedure failed or data violates a numerical contract).
"""


class HermTripleError(Exception):
    """Base class for all library errors."""


class InputError(HermTripleError):
    """Invalid argument, file content, or configuration."""


class NumericalError(HermTripleError):
    """A numerical procedure failed to meet its contract."""


class DimensionMismatch(InputError):
    pass


class AsymmetryTooLarge(InputError):
    pass


class FirstComponentNotReal(InputError):
    pass


class DomainViolation(InputError):
    pass


class InsufficientSamples(InputError):
    pass


class NoConvergence(NumericalError):
    pass


class BreakdownUnresolvable(NumericalError):
    pass


class ImaginaryResidueTooLarge(NumericalError):
    pass


class NotTripotent(NumericalError):
    pass


class NotSimultaneouslyDiagonalizable(NumericalError):
    pass


class DegenerateRandomMatrix(NumericalError):
    pass
