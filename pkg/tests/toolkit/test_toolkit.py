from fractions import Fraction

import pytest

from toolkit.errors import K3OrdError, ParseError, SchemaError
from toolkit.linalg import det
from toolkit.utils.color import Color, verdict_style
from toolkit.utils.toolkit_math import (
    box_vectors,
    clamp,
    gcd_all,
    lcm_all,
    primitive_box_vectors,
    random_int_matrix,
    random_unimodular,
)
from toolkit.verdict import Verdict
from units import int_vector, rat_vector, to_integer, to_rational


@pytest.mark.parametrize(
    "val, _min, _max, expected",
    [
        (5, 0, 4, 4),
        (-1, 0, 4, 0),
        (2, 0, 4, 2),
        (0, 0, 0, 0),
    ],
)
def test_clamp(val, _min, _max, expected):
    assert clamp(val, _min, _max) == expected


@pytest.mark.parametrize(
    "values, expected",
    [
        ([], 1),
        ([2, 3], 6),
        ([2, 4, 6], 12),
        ([6, 3, 2], 6),
    ],
)
def test_lcm_all(values, expected):
    assert lcm_all(values) == expected


@pytest.mark.parametrize(
    "values, expected",
    [
        ([], 0),
        ([0, 0], 0),
        ([4, 6], 2),
        ([-9, 6, 3], 3),
    ],
)
def test_gcd_all(values, expected):
    assert gcd_all(values) == expected


def test_box_vectors():
    vectors = list(box_vectors(2, 1))
    assert len(vectors) == 9
    assert vectors[0] == (-1, -1)
    assert vectors[-1] == (1, 1)


def test_primitive_box_vectors():
    vectors = list(primitive_box_vectors(2, 2))
    assert (1, 0) in vectors
    assert (-1, 0) not in vectors
    assert (2, 2) not in vectors
    assert (0, 0) not in vectors
    assert (1, -2) in vectors
    assert len(vectors) == len(set(vectors))


def test_random_unimodular(rng):
    for n in range(1, 6):
        assert abs(det(random_unimodular(rng, n))) == 1


def test_random_int_matrix_bounds(rng):
    A = random_int_matrix(rng, 3, 4, 2)
    assert A.shape == (3, 4)
    assert all(-2 <= x <= 2 for row in A.to_rows() for x in row)


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, 3),
        (Fraction(6, 2), 3),
        (" -4 ", -4),
        (True, 1),
    ],
)
def test_to_integer(value, expected):
    assert to_integer(value) == expected
    assert type(to_integer(value)) is int


@pytest.mark.parametrize("value", [1.0, Fraction(1, 2), None])
def test_to_integer_refuses(value):
    with pytest.raises(TypeError):
        to_integer(value)


def test_to_rational():
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational(2) == Fraction(2)
    with pytest.raises(TypeError):
        to_rational(0.5)


def test_vectors():
    assert int_vector(["1", 2, Fraction(3)]) == (1, 2, 3)
    assert rat_vector(["1/2", 2]) == (Fraction(1, 2), Fraction(2))


def test_verdict_exit_codes():
    assert [v.exit_code for v in Verdict] == [0, 1, 2, 0]


@pytest.mark.parametrize(
    "verdict, opening",
    [
        (Verdict.PASS, Color.GREEN),
        (Verdict.FAIL, Color.YELLOW),
        (Verdict.ERROR, Color.RED),
        (Verdict.ANNOTATED, Color.CYAN),
    ],
)
def test_verdict_style(verdict, opening):
    assert verdict_style(verdict, True) == (opening, Color.END)
    assert verdict_style(verdict, False) == ("", "")


def test_errors_refine_builtins():
    assert issubclass(ParseError, K3OrdError)
    assert issubclass(SchemaError, ValueError)
