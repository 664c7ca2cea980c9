from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from toolkit.errors import DimensionMismatchError, NonSquareError, SingularMatrixError
from units import IntVector, RatVector, to_integer, to_rational


def _object_array(rows: Iterable[Sequence], coerce: Callable, cols: int | None) -> np.ndarray:
    rows = [list(r) for r in rows]
    if cols is None:
        cols = len(rows[0]) if rows else 0
    data = np.empty((len(rows), cols), dtype=object)
    for i, r in enumerate(rows):
        if len(r) != cols:
            raise DimensionMismatchError(f"Row {i} has {len(r)} entries, expected {cols}.")
        for j, x in enumerate(r):
            data[i, j] = coerce(x)
    return data


def _dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"Cannot multiply {a.shape} by {b.shape}.")
    if a.shape[1] == 0:
        out = np.empty((a.shape[0], b.shape[1]), dtype=object)
        out.fill(0)
        return out
    return a.dot(b)


class ExactMatrix:
    """
    Immutable dense matrix of exact numbers, backed by a numpy object array.

    Entries are Python ints (IntMatrix) or Fractions (RatMatrix), so there is
    no overflow and no rounding.
    """

    __slots__ = ("_a",)

    @staticmethod
    def _coerce(x):
        return to_rational(x)

    def __init__(self, rows: Iterable[Sequence] = (), cols: int | None = None):
        self._a = _object_array(rows, self._coerce, cols)
        self._a.flags.writeable = False

    @classmethod
    def _wrap(cls, data: np.ndarray):
        obj = cls.__new__(cls)
        out = np.empty(data.shape, dtype=object)
        for idx, x in np.ndenumerate(data):
            out[idx] = cls._coerce(x)
        out.flags.writeable = False
        obj._a = out
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int):
        data = np.empty((rows, cols), dtype=object)
        data.fill(0)
        return cls._wrap(data)

    @classmethod
    def identity(cls, n: int):
        data = np.empty((n, n), dtype=object)
        data.fill(0)
        for i in range(n):
            data[i, i] = 1
        return cls._wrap(data)

    @classmethod
    def diag(cls, values: Sequence):
        n = len(values)
        data = np.empty((n, n), dtype=object)
        data.fill(0)
        for i, v in enumerate(values):
            data[i, i] = v
        return cls._wrap(data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None):
        columns = [list(c) for c in columns]
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls(columns).T

    @classmethod
    def from_array(cls, data: np.ndarray):
        if data.ndim != 2:
            raise DimensionMismatchError(f"Expected a 2-d array, got {data.ndim}-d.")
        return cls._wrap(data)

    # Shape

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self):
        if not self.is_square():
            raise NonSquareError(f"Expected a square matrix, got {self.rows}x{self.cols}.")

    # Access

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        return self._a[i, j]

    def row(self, i: int) -> tuple:
        return tuple(self._a[i, :])

    def column(self, j: int) -> tuple:
        return tuple(self._a[:, j])

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self) -> list[list]:
        return [list(r) for r in self._a]

    @property
    def array(self) -> np.ndarray:
        """
        A writable copy of the underlying object array.
        """
        return self._a.copy()

    def leading(self, n: int):
        return type(self)._wrap(self._a[:n, :n])

    def select(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None):
        data = self._a
        if rows is not None:
            data = data[list(rows), :]
        if cols is not None:
            data = data[:, list(cols)]
        return type(self)._wrap(data.reshape(
            len(rows) if rows is not None else self.rows,
            len(cols) if cols is not None else self.cols,
        ))

    # Arithmetic

    @property
    def T(self):
        return type(self)._wrap(self._a.T)

    def _result_type(self, other) -> type:
        if isinstance(self, IntMatrix) and isinstance(other, IntMatrix):
            return IntMatrix
        return RatMatrix

    def __matmul__(self, other: ExactMatrix):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._result_type(other)._wrap(_dot(self._a, other._a))

    def __add__(self, other: ExactMatrix):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}.")
        return self._result_type(other)._wrap(self._a + other._a)

    def __sub__(self, other: ExactMatrix):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot subtract {other.shape} from {self.shape}.")
        return self._result_type(other)._wrap(self._a - other._a)

    def __neg__(self):
        return type(self)._wrap(-self._a)

    def scale(self, k):
        if isinstance(self, IntMatrix) and not isinstance(k, Fraction):
            return IntMatrix._wrap(self._a * to_integer(k))
        return RatMatrix._wrap(self._a * to_rational(k))

    def apply(self, vector: Sequence) -> tuple:
        """
        Multiplies the matrix by a column vector.
        """
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"Vector of length {len(vector)} for {self.cols} columns.")
        column = np.empty((self.cols, 1), dtype=object)
        for i, v in enumerate(vector):
            column[i, 0] = self._coerce(v)
        return tuple(_dot(self._a, column)[:, 0])

    def power(self, k: int):
        self.require_square()
        if k < 0:
            raise ValueError("Only nonnegative powers are supported.")
        result = type(self).identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    # Predicates

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._a.flat)

    def is_identity(self) -> bool:
        return self.is_square() and self == type(self).identity(self.rows)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    # Protocol

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for x, y in zip(self._a.flat, other._a.flat)
        )

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._a.flat)))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_rows()})"


class IntMatrix(ExactMatrix):
    """
    Matrix of arbitrary-precision integers.
    """

    __slots__ = ()

    @staticmethod
    def _coerce(x):
        return to_integer(x)

    def apply(self, vector: Sequence) -> IntVector:
        return super().apply(vector)


class RatMatrix(ExactMatrix):
    """
    Matrix of rationals kept in lowest terms (Fraction normalizes on creation).
    """

    __slots__ = ()

    @classmethod
    def of(cls, matrix: ExactMatrix) -> RatMatrix:
        return cls._wrap(matrix._a)

    def apply(self, vector: Sequence) -> RatVector:
        return super().apply(vector)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._a.flat)

    def to_int(self) -> IntMatrix:
        if not self.is_integral():
            raise TypeError("Matrix has non-integral entries.")
        return IntMatrix._wrap(self._a)

    def inverse(self) -> RatMatrix:
        """
        Gauss-Jordan inverse over Q.

        :raises SingularMatrixError: if the matrix is not invertible
        """
        self.require_square()
        n = self.rows
        work = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("Matrix is singular.")
            work[col], work[pivot] = work[pivot], work[col]
            p = work[col][col]
            work[col] = [x / p for x in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [x - f * y for x, y in zip(work[r], work[col])]
        return RatMatrix([r[n:] for r in work], cols=n)


def hstack(*matrices: ExactMatrix) -> ExactMatrix:
    rows = {m.rows for m in matrices}
    if len(rows) != 1:
        raise DimensionMismatchError(f"Cannot stack matrices with row counts {sorted(rows)}.")
    cls = IntMatrix if all(isinstance(m, IntMatrix) for m in matrices) else RatMatrix
    return cls._wrap(np.hstack([m._a for m in matrices]))


def vstack(*matrices: ExactMatrix) -> ExactMatrix:
    cols = {m.cols for m in matrices}
    if len(cols) != 1:
        raise DimensionMismatchError(f"Cannot stack matrices with column counts {sorted(cols)}.")
    cls = IntMatrix if all(isinstance(m, IntMatrix) for m in matrices) else RatMatrix
    return cls._wrap(np.vstack([m._a for m in matrices]))


def block_diag(*matrices: ExactMatrix) -> ExactMatrix:
    cls = IntMatrix if all(isinstance(m, IntMatrix) for m in matrices) else RatMatrix
    rows = sum(m.rows for m in matrices)
    cols = sum(m.cols for m in matrices)
    data = np.empty((rows, cols), dtype=object)
    data.fill(0)
    r = c = 0
    for m in matrices:
        data[r:r + m.rows, c:c + m.cols] = m._a
        r += m.rows
        c += m.cols
    return cls._wrap(data)


def dot(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise DimensionMismatchError(f"Vectors of lengths {len(x)} and {len(y)}.")
    return sum((a * b for a, b in zip(x, y)), 0)
