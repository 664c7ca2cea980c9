from fractions import Fraction

import pytest

from scenario import decode_int, decode_int_matrix, decode_int_vector, decode_rational, dumps, encode_value, load_json
from scenario.codec import decode_rat_matrix, require_shape
from surfaces import OrderClass
from toolkit.errors import ParseError, SchemaError
from toolkit.linalg import IntMatrix, RatMatrix


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, "3"),
        (-12345678901234567890, "-12345678901234567890"),
        (Fraction(-3, 2), {"num": "-3", "den": "2"}),
        (True, True),
        (None, None),
        ("P2", "P2"),
        (OrderClass.NCY, "ncy"),
        ((1, Fraction(1, 2)), ["1", {"num": "1", "den": "2"}]),
        ({"a": 1}, {"a": "1"}),
    ],
)
def test_encode_value(value, expected):
    assert encode_value(value) == expected


def test_encode_matrices():
    assert encode_value(IntMatrix([[1, -2]])) == [["1", "-2"]]
    assert encode_value(RatMatrix([["1/2"]])) == [[{"num": "1", "den": "2"}]]


def test_encode_refuses_floats():
    with pytest.raises(TypeError):
        encode_value(0.5)


def test_decode_int():
    assert decode_int("-7") == -7
    assert decode_int(7) == 7
    for bad in (True, "x", 3.0, None):
        with pytest.raises(SchemaError):
            decode_int(bad)


@pytest.mark.parametrize(
    "value, expected",
    [
        ({"num": "-3", "den": "6"}, Fraction(-1, 2)),
        ("3/4", Fraction(3, 4)),
        ("5", Fraction(5)),
        (2, Fraction(2)),
    ],
)
def test_decode_rational(value, expected):
    assert decode_rational(value) == expected


@pytest.mark.parametrize("value", [{"num": "1", "den": "0"}, {"num": "1"}, "1/x", [1]])
def test_decode_rational_errors(value):
    with pytest.raises(SchemaError):
        decode_rational(value)


def test_decode_vectors_and_matrices():
    assert decode_int_vector(["1", 2]) == (1, 2)
    with pytest.raises(SchemaError):
        decode_int_vector(["1"], length=2)
    with pytest.raises(SchemaError):
        decode_int_vector("1")
    assert decode_int_matrix([["1", "0"], [0, 1]]).is_identity()
    assert decode_rat_matrix([[{"num": "1", "den": "2"}]]) == RatMatrix([["1/2"]])
    with pytest.raises(SchemaError):
        decode_int_matrix([[1, 2], [3]])
    with pytest.raises(SchemaError):
        decode_int_matrix("I")


def test_require_shape():
    require_shape(IntMatrix.identity(2), (2, 2), "action")
    with pytest.raises(SchemaError, match="action"):
        require_shape(IntMatrix.identity(2), (3, 3), "action")


def test_dumps_is_stable():
    text = dumps({"b": "1", "a": ["2"]})
    assert text.endswith("}\n")
    assert text.index('"a"') < text.index('"b"')
    assert dumps({"a": "1", "b": "2"}) == dumps({"b": "2", "a": "1"})


def test_load_json_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        load_json(bad)
    with pytest.raises(ParseError):
        load_json(tmp_path / "missing.json")
