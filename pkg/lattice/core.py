from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import constants
from toolkit.datafile import IntRows, load_matrices, rows_checksum
from toolkit.errors import ChecksumError, DimensionMismatchError, NotSymmetricError, UnsupportedParameterError
from toolkit.linalg import IntMatrix, Signature, block_diag, det, signature
from units import IntVector, count, int_vector


@dataclass(frozen=True)
class Lattice:
    """
    A free Z-module with an integral symmetric bilinear form.

    The Gram matrix is the only thing arithmetic looks at; labels are
    display metadata.
    """

    gram: IntMatrix
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.gram, IntMatrix):
            object.__setattr__(self, "gram", IntMatrix(self.gram.to_rows(), cols=self.gram.cols))
        self.gram.require_square()
        if not self.gram.is_symmetric():
            raise NotSymmetricError("Gram matrix must be symmetric.")
        if self.labels is not None and len(self.labels) != self.rank:
            raise DimensionMismatchError(f"{len(self.labels)} labels for rank {self.rank}.")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> Lattice:
        rows = [list(r) for r in rows]
        return cls(IntMatrix(rows, cols=len(rows)), tuple(labels) if labels is not None else None)

    @property
    def rank(self) -> int:
        return self.gram.rows

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return pair(self, x, y)

    def square(self, x: Sequence[int]) -> int:
        return pair(self, x, x)

    def det(self) -> int:
        return det(self.gram)

    def signature(self) -> Signature:
        return signature(self.gram)

    def is_even(self) -> bool:
        return is_even(self)

    def label(self, i: int) -> str:
        if self.labels is None:
            return f"s{i + 1}"
        return self.labels[i]

    def describe(self, x: Sequence[int]) -> str:
        """
        Writes a vector as a combination of basis labels, e.g. "s1 + s2 - 2 s4".
        """
        terms = []
        for i, a in enumerate(x):
            if a == 0:
                continue
            name = self.label(i)
            coefficient = "" if abs(a) == 1 else f"{abs(a)} "
            sign = "-" if a < 0 else "+"
            terms.append(f"{sign} {coefficient}{name}")
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def pair(L: Lattice, x: Sequence[int], y: Sequence[int]) -> int:
    """
    x^T G y

    :raises DimensionMismatchError: if a vector length differs from the rank
    """
    x, y = int_vector(x), int_vector(y)
    if len(x) != L.rank or len(y) != L.rank:
        raise DimensionMismatchError(f"Vectors of lengths {len(x)}, {len(y)} in a rank {L.rank} lattice.")
    Gy = L.gram.apply(y)
    return sum(a * b for a, b in zip(x, Gy))


def is_even(L: Lattice) -> bool:
    return all(L.gram[i, i] % 2 == 0 for i in range(L.rank))


def direct_sum(*lattices: Lattice) -> Lattice:
    """
    Orthogonal direct sum. Labels survive only if every summand has them.
    """
    if not lattices:
        return Lattice(IntMatrix.zeros(0, 0))
    labels = None
    if all(L.labels is not None for L in lattices):
        labels = tuple(label for L in lattices for label in L.labels)
    return Lattice(block_diag(*(L.gram for L in lattices)), labels)


def scaled(L: Lattice, k: int) -> Lattice:
    return Lattice(L.gram.scale(k), L.labels)


def build_E8(prefix: str = "l") -> Lattice:
    rows = [[0] * constants.E8_RANK for _ in range(constants.E8_RANK)]
    for i in range(constants.E8_RANK):
        rows[i][i] = -2
    for a, b in constants.E8_EDGES:
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = 1
    return Lattice.of(rows, [f"{prefix}{i}" for i in range(1, constants.E8_RANK + 1)])


def build_H(prefix: str = "m") -> Lattice:
    return Lattice.of(constants.H_GRAM, [f"{prefix}1", f"{prefix}2"])


def build_K3() -> Lattice:
    """
    E8 + E8 + H + H + H in the basis order of constants.K3_LABELS.
    """
    lattice = direct_sum(build_E8("l"), build_E8("l'"), build_H("m"), build_H("m'"), build_H("m''"))
    return Lattice(lattice.gram, constants.K3_LABELS)


def q_rows() -> IntRows:
    """
    The shipped 18 x 18 nodal-class matrix, verified against its data file.
    """
    return load_matrices(constants.Q_FILE)["gram"]


def q_checksum(rows: Sequence[Sequence[int]] | None = None) -> str:
    return rows_checksum(q_rows() if rows is None else rows)


def build_Q(n: int) -> Lattice:
    """
    The leading n x n block of the shipped 18 x 18 nodal-class matrix.

    :param n: rank, 1 <= n <= 18
    :raises UnsupportedParameterError: for n out of range
    :raises ChecksumError: if the shipped matrix fails its checksum
    """
    if not 1 <= n <= constants.Q_RANK:
        raise UnsupportedParameterError(f"Q_n is defined for 1 <= n <= {constants.Q_RANK}, got {n}.")
    rows = q_rows()
    if q_checksum(rows) != constants.Q_SHA256:
        raise ChecksumError(f"{constants.Q_FILE} does not hold the nodal-class matrix this release was built with.")
    full = IntMatrix(rows, cols=constants.Q_RANK)
    return Lattice(full.leading(n), tuple(f"s{i}" for i in range(1, n + 1)))


def unit_vector(rank: int, i: int, scale: int = 1) -> IntVector:
    return tuple(scale if j == i else 0 for j in range(rank))
