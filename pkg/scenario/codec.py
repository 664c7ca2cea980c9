"""
JSON encoding of exact values.

Integers are decimal strings, rationals are {"num": "...", "den": "..."},
matrices are lists of rows. Input is read leniently: plain JSON integers
are accepted wherever a decimal string is.
"""
from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

from toolkit.errors import ParseError, SchemaError
from toolkit.linalg import ExactMatrix, IntMatrix, RatMatrix
from units import IntVector, RatVector


def encode_value(value: Any) -> Any:
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, ExactMatrix):
        return [[encode_value(x) for x in row] for row in value.to_rows()]
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    raise TypeError(f"Cannot encode {type(value).__name__}.")


def decode_int(value: Any, where: str = "value") -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(f"{where}: expected an integer, got {value!r}.")
    try:
        return int(value)
    except ValueError:
        raise SchemaError(f"{where}: {value!r} is not a decimal integer.") from None


def decode_rational(value: Any, where: str = "value") -> Fraction:
    if isinstance(value, dict):
        if set(value) != {"num", "den"}:
            raise SchemaError(f"{where}: a rational needs exactly 'num' and 'den'.")
        den = decode_int(value["den"], where)
        if den == 0:
            raise SchemaError(f"{where}: zero denominator.")
        return Fraction(decode_int(value["num"], where), den)
    if isinstance(value, str) and "/" in value:
        try:
            return Fraction(value)
        except ValueError:
            raise SchemaError(f"{where}: {value!r} is not a rational.") from None
    return Fraction(decode_int(value, where))


def decode_int_vector(value: Any, where: str = "vector", length: int | None = None) -> IntVector:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected a list, got {value!r}.")
    v = tuple(decode_int(x, f"{where}[{i}]") for i, x in enumerate(value))
    if length is not None and len(v) != length:
        raise SchemaError(f"{where}: expected {length} entries, got {len(v)}.")
    return v


def decode_rat_vector(value: Any, where: str = "vector", length: int | None = None) -> RatVector:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected a list, got {value!r}.")
    v = tuple(decode_rational(x, f"{where}[{i}]") for i, x in enumerate(value))
    if length is not None and len(v) != length:
        raise SchemaError(f"{where}: expected {length} entries, got {len(v)}.")
    return v


def decode_int_matrix(value: Any, where: str = "matrix") -> IntMatrix:
    rows = _rows(value, where)
    cols = len(rows[0]) if rows else 0
    return IntMatrix(
        [[decode_int(x, f"{where}[{i}][{j}]") for j, x in enumerate(_row(r, cols, where, i))] for i, r in enumerate(rows)],
        cols=cols,
    )


def decode_rat_matrix(value: Any, where: str = "matrix") -> RatMatrix:
    rows = _rows(value, where)
    cols = len(rows[0]) if rows else 0
    return RatMatrix(
        [[decode_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(_row(r, cols, where, i))] for i, r in enumerate(rows)],
        cols=cols,
    )


def require_shape(matrix: ExactMatrix, shape: tuple[int, int], where: str):
    if matrix.shape != shape:
        raise SchemaError(f"{where}: expected a {shape[0]}x{shape[1]} matrix, got {matrix.rows}x{matrix.cols}.")


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_json(path: Path) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e}).") from None
    except UnicodeDecodeError as e:
        raise ParseError(f"{path}: not UTF-8 ({e}).") from None
    except OSError as e:
        raise ParseError(f"{path}: cannot be read ({e.strerror}).") from None


def _rows(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected a list of rows, got {value!r}.")
    return value


def _row(row: Any, cols: int, where: str, i: int) -> list:
    if not isinstance(row, list) or len(row) != cols:
        raise SchemaError(f"{where}: row {i} is not a list of {cols} entries.")
    return row
