"""
Exception hierarchy shared by every package.

Each error also derives from the builtin it refines, so callers that only
know about ValueError / TypeError keep working.
"""


class K3OrdError(Exception):
    """
    Root of every error raised on purpose by k3ord.
    """
    ...


# Linear algebra

class NonSquareError(K3OrdError, ValueError):
    ...


class NotSymmetricError(K3OrdError, ValueError):
    ...


class DimensionMismatchError(K3OrdError, ValueError):
    ...


# Lattices and actions

class SingularFrameError(K3OrdError, ValueError):
    """
    The image of the Picard lattice and its complement do not span over Q.
    """
    ...


class ActionNotIsometricError(K3OrdError, ValueError):
    ...


class NotAnActionError(K3OrdError, ValueError):
    """
    sigma is not an isometry, or sigma^n is not the identity.
    """
    ...


class NotACocycleError(K3OrdError, ValueError):
    ...


class OddEntryError(K3OrdError, ValueError):
    ...


# Divisors and surfaces

class OddSelfIntersectionError(K3OrdError, ValueError):
    ...


class SquareTooNegativeError(K3OrdError, ValueError):
    ...


class AmbiguousZeroPairingError(K3OrdError, ValueError):
    ...


class GensDoNotSpanError(K3OrdError, ValueError):
    ...


class UnsupportedParameterError(K3OrdError, ValueError):
    ...


class DNotDividingError(K3OrdError, ValueError):
    ...


class OutOfAssertedRangeError(K3OrdError, ValueError):
    ...


# Fibrations

class UnsupportedActionError(K3OrdError, ValueError):
    ...


class NotANumericalSectionError(K3OrdError, ValueError):
    ...


# Scenarios and corpus

class ParseError(K3OrdError, ValueError):
    """
    A scenario file is not valid JSON or is missing its envelope.
    """
    ...


class SchemaError(K3OrdError, ValueError):
    """
    A scenario parsed but its payload has the wrong shape.
    """
    ...


class MissingCorpusError(K3OrdError, FileNotFoundError):
    ...


class SingularMatrixError(K3OrdError, ArithmeticError):
    ...


class ChecksumError(K3OrdError, ValueError):
    """
    A shipped data file does not match its recorded SHA-256.
    """
    ...
