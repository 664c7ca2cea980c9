from typing import Sequence

from toolkit.errors import DimensionMismatchError
from toolkit.linalg.matrix import IntMatrix
from toolkit.linalg.normal_forms import hermite_normal_form, snf
from units import IntVector, int_vector


def integer_kernel(A: IntMatrix) -> IntMatrix:
    """
    Saturated basis of {x in Z^cols : A·x = 0}, one basis vector per column.

    The basis is put in Hermite normal form so it does not depend on the
    path the Smith reduction took.
    """
    result = snf(A)
    basis = result.V.select(cols=range(result.rank, A.cols))
    if basis.cols == 0:
        return IntMatrix.zeros(A.cols, 0)
    return hermite_normal_form(basis.T).T


def solve_integer(A: IntMatrix, b: Sequence[int]) -> IntVector | None:
    """
    Finds an integer x with A·x = b.

    :returns: a solution, or None when no integer solution exists
    """
    b = int_vector(b)
    if len(b) != A.rows:
        raise DimensionMismatchError(f"Right-hand side of length {len(b)} for {A.rows} rows.")
    result = snf(A)
    c = result.U.apply(b)
    diagonal = result.diagonal
    y = [0] * A.cols
    for i in range(A.rows):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            if c[i] != 0:
                return None
        elif c[i] % d:
            return None
        else:
            y[i] = c[i] // d
    return result.V.apply(y)
