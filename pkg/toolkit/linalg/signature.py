from fractions import Fraction
from typing import NamedTuple

from toolkit.errors import NotSymmetricError
from toolkit.linalg.matrix import ExactMatrix


class Signature(NamedTuple):
    positive: int
    negative: int
    zero: int


def congruence_diagonalize(G: ExactMatrix) -> tuple[Fraction, ...]:
    """
    Diagonal of P^T·G·P for a rational P, found by symmetric elimination.

    A zero pivot is first swapped with a later nonzero diagonal entry; if the
    rest of the diagonal is zero too, row j and column j are added to row i
    and column i, which puts 2·g_ij on the diagonal.

    :raises NotSymmetricError: if G is not symmetric
    """
    if not G.is_symmetric():
        raise NotSymmetricError("Gram matrix must be symmetric.")
    n = G.rows
    M = [[Fraction(x) for x in row] for row in G.to_rows()]
    diagonal = []
    for i in range(n):
        if M[i][i] == 0:
            # swap before adding: the row+column step is only for an all-zero diagonal tail
            j = next((j for j in range(i + 1, n) if M[j][j] != 0), None)
            if j is not None:
                M[i], M[j] = M[j], M[i]
                for row in M:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if M[i][j] != 0), None)
                if j is not None:
                    for k in range(n):
                        M[i][k] += M[j][k]
                    for k in range(n):
                        M[k][i] += M[k][j]
        p = M[i][i]
        if p != 0:
            for j in range(i + 1, n):
                if M[j][i] != 0:
                    f = M[j][i] / p
                    for k in range(i, n):
                        M[j][k] -= f * M[i][k]
                    for k in range(i, n):
                        M[k][j] -= f * M[k][i]
        diagonal.append(M[i][i])
    return tuple(diagonal)


def signature(G: ExactMatrix) -> Signature:
    diagonal = congruence_diagonalize(G)
    return Signature(
        positive=sum(1 for d in diagonal if d > 0),
        negative=sum(1 for d in diagonal if d < 0),
        zero=sum(1 for d in diagonal if d == 0),
    )
