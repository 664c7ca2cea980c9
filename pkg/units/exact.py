"""
Exact number types for use in typing and conversion.

Nothing in the package uses floating point; these aliases document which
kind of exact value a function expects.
"""

from fractions import Fraction
from numbers import Integral, Rational
from typing import Sequence

# Scalars

count = int

# Vectors (coordinates in a fixed basis)

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]


def to_integer(value) -> int:
    """
    Coerces an exact value to a Python int.

    Accepts ints, integral Fractions and decimal strings. Floats are refused.

    :param value: value to coerce
    :returns: int
    """
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, Integral):
        return int(value)
    if isinstance(value, Rational):
        if value.denominator != 1:
            raise TypeError(f"{value} is not an integer")
        return int(value.numerator)
    if isinstance(value, str):
        return int(value.strip())
    raise TypeError(f"Type {type(value).__name__} is not an exact integer.")


def to_rational(value) -> Fraction:
    """
    Coerces an exact value to a Fraction in lowest terms.

    :param value: int, Fraction or string such as "3/4"
    :returns: Fraction
    """
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (Integral, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Type {type(value).__name__} is not an exact rational.")


def int_vector(values: Sequence) -> IntVector:
    return tuple(to_integer(v) for v in values)


def rat_vector(values: Sequence) -> RatVector:
    return tuple(to_rational(v) for v in values)
