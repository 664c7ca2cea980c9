from dataclasses import dataclass

import numpy as np

from toolkit.errors import SingularMatrixError
from toolkit.linalg.matrix import IntMatrix, RatMatrix


@dataclass(frozen=True)
class SNFResult:
    """
    Smith normal form U·A·V = D with U, V unimodular and
    d1 | d2 | ... on the diagonal of D, all nonnegative.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """
        The nonzero diagonal entries.
        """
        return tuple(d for d in self.diagonal if d != 0)


def _min_abs_position(D: np.ndarray, t: int) -> tuple[int, int] | None:
    # row-major scan keeps the choice deterministic
    best = None
    for i in range(t, D.shape[0]):
        for j in range(t, D.shape[1]):
            x = D[i, j]
            if x != 0 and (best is None or abs(x) < abs(D[best])):
                best = (i, j)
    return best


def _first_non_divisible_row(D: np.ndarray, t: int, p: int) -> int | None:
    for i in range(t + 1, D.shape[0]):
        for j in range(t + 1, D.shape[1]):
            if D[i, j] % p:
                return i
    return None


def snf(A: IntMatrix) -> SNFResult:
    """
    Smith normal form by elementary unimodular row and column operations.

    The pivot is always the nonzero entry of least absolute value in the
    remaining block, first in row-major order.

    :param A: integer matrix of any shape
    :returns: SNFResult with U·A·V = D
    """
    m, n = A.shape
    D = A.array
    U = IntMatrix.identity(m).array
    V = IntMatrix.identity(n).array

    for t in range(min(m, n)):
        while True:
            pivot = _min_abs_position(D, t)
            if pivot is None:
                return SNFResult(IntMatrix.from_array(U), IntMatrix.from_array(D), IntMatrix.from_array(V))
            i, j = pivot
            if i != t:
                D[[t, i]] = D[[i, t]]
                U[[t, i]] = U[[i, t]]
            if j != t:
                D[:, [t, j]] = D[:, [j, t]]
                V[:, [t, j]] = V[:, [j, t]]
            p = D[t, t]

            clean = True
            for r in range(t + 1, m):
                if D[r, t] != 0:
                    q = D[r, t] // p
                    D[r] = D[r] - q * D[t]
                    U[r] = U[r] - q * U[t]
                    clean = clean and D[r, t] == 0
            for c in range(t + 1, n):
                if D[t, c] != 0:
                    q = D[t, c] // p
                    D[:, c] = D[:, c] - q * D[:, t]
                    V[:, c] = V[:, c] - q * V[:, t]
                    clean = clean and D[t, c] == 0
            if not clean:
                continue

            bad = _first_non_divisible_row(D, t, p)
            if bad is None:
                break
            D[t] = D[t] + D[bad]
            U[t] = U[t] + U[bad]

        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]

    return SNFResult(IntMatrix.from_array(U), IntMatrix.from_array(D), IntMatrix.from_array(V))


def hermite_normal_form(A: IntMatrix) -> IntMatrix:
    """
    Row-style Hermite normal form.

    The rows of the result are a basis of the row lattice of A: echelon
    shape, positive pivots, entries above a pivot reduced into [0, pivot).
    Zero rows are dropped, so the result has rank(A) rows.
    """
    H = A.array
    m, n = H.shape
    r = 0
    for c in range(n):
        if r >= m:
            break
        while True:
            nonzero = [i for i in range(r, m) if H[i, c] != 0]
            if not nonzero:
                break
            k = min(nonzero, key=lambda i: (abs(H[i, c]), i))
            if k != r:
                H[[r, k]] = H[[k, r]]
            done = True
            for i in range(r + 1, m):
                if H[i, c] != 0:
                    q = H[i, c] // H[r, c]
                    H[i] = H[i] - q * H[r]
                    done = done and H[i, c] == 0
            if done:
                break
        if H[r, c] == 0:
            continue
        if H[r, c] < 0:
            H[r] = -H[r]
        for i in range(r):
            q = H[i, c] // H[r, c]
            H[i] = H[i] - q * H[r]
        r += 1
    return IntMatrix.from_array(H[:r].reshape(r, n))


def rank(A: IntMatrix) -> int:
    return hermite_normal_form(A).rows


def is_unimodular(U: IntMatrix) -> bool:
    from toolkit.linalg.determinant import det

    return U.is_square() and abs(det(U)) == 1


def unimodular_inverse(U: IntMatrix) -> IntMatrix:
    """
    Integer inverse of a unimodular matrix.

    :raises SingularMatrixError: if U is not unimodular
    """
    inverse = RatMatrix.of(U).inverse()
    if not inverse.is_integral():
        raise SingularMatrixError("Matrix is not unimodular.")
    return inverse.to_int()
