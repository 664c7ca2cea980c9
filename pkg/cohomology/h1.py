from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from cohomology.glattice import GLattice
from toolkit.errors import DimensionMismatchError, NotACocycleError
from toolkit.linalg import (
    IntMatrix,
    hermite_normal_form,
    hstack,
    integer_kernel,
    snf,
    solve_integer,
    unimodular_inverse,
)
from units import IntVector, int_vector
from utils.local_logger import LocalLogger

log = LocalLogger("H1")


@dataclass(frozen=True)
class CohResult:
    """
    H^1 as a list of torsion invariant factors and a free rank, with one
    cocycle per torsion factor whose classes generate.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int = 0
    generators: tuple[IntVector, ...] = field(default=())

    @property
    def order(self) -> int | None:
        """
        Group order, None when infinite.
        """
        if self.free_rank:
            return None
        total = 1
        for d in self.invariant_factors:
            total *= d
        return total

    def is_trivial(self) -> bool:
        return not self.invariant_factors and not self.free_rank


def norm_and_diff(gl: GLattice) -> tuple[IntMatrix, IntMatrix]:
    """
    N = 1 + sigma + ... + sigma^(n-1) and D = 1 - sigma.
    """
    identity = IntMatrix.identity(gl.rank)
    N = IntMatrix.zeros(gl.rank, gl.rank)
    power = identity
    for _ in range(gl.order):
        N = N + power
        power = power @ gl.sigma
    return N, identity - gl.sigma


def h1(gl: GLattice) -> CohResult:
    """
    ker N / im D.

    With K a saturated basis of ker N, the columns of D are written in
    K-coordinates as a matrix C. Smith form U·C·V = diag(d_i) makes the
    quotient Z^k / im C a sum of Z/d_i, generated by the columns of
    K·U^-1.
    """
    N, D = norm_and_diff(gl)
    K = integer_kernel(N)
    if K.cols == 0:
        return CohResult(())

    coordinates = []
    for column in D.columns():
        c = solve_integer(K, column)
        if c is None:
            raise ArithmeticError("Column of 1 - sigma is not in ker N.")
        coordinates.append(c)
    C = IntMatrix.from_columns(coordinates, rows=K.cols)

    result = snf(C)
    lifts = K @ unimodular_inverse(result.U)
    diagonal = result.diagonal + (0,) * (K.cols - len(result.diagonal))

    factors, generators = [], []
    free_rank = 0
    for i, d in enumerate(diagonal):
        if d == 0:
            free_rank += 1
        elif d > 1:
            factors.append(d)
            generators.append(lifts.column(i))
    log.debug(f"H1 of a rank {gl.rank} module under order {gl.order}: factors {factors}")
    return CohResult(tuple(factors), free_rank, tuple(generators))


def is_cocycle(gl: GLattice, v: Sequence[int]) -> bool:
    N, _ = norm_and_diff(gl)
    return all(x == 0 for x in N.apply(_check(gl, v)))


def is_coboundary(gl: GLattice, v: Sequence[int]) -> bool:
    _, D = norm_and_diff(gl)
    return solve_integer(D, _check(gl, v)) is not None


def class_order(gl: GLattice, v: Sequence[int]) -> int:
    """
    Order of the class of the cocycle v in H^1; it divides the group order.

    :raises NotACocycleError: if v is not a cocycle
    """
    v = _check(gl, v)
    if not is_cocycle(gl, v):
        raise NotACocycleError(f"{v} is not a cocycle.")
    for m in range(1, gl.order + 1):
        if is_coboundary(gl, tuple(m * x for x in v)):
            return m
    raise ArithmeticError(f"Class of {v} has order not dividing {gl.order}.")


def generates_same_classes(gl: GLattice, vs: Sequence[Sequence[int]], ws: Sequence[Sequence[int]]) -> bool:
    """
    True when the classes of vs and ws generate the same subgroup of H^1.
    """
    _, D = norm_and_diff(gl)
    return _span_with_image(D, vs) == _span_with_image(D, ws)


def _span_with_image(D: IntMatrix, vectors: Sequence[Sequence[int]]) -> IntMatrix:
    columns = [int_vector(v) for v in vectors]
    stacked = hstack(D, IntMatrix.from_columns(columns, rows=D.rows)) if columns else D
    return hermite_normal_form(stacked.T)


def _check(gl: GLattice, v: Sequence[int]) -> IntVector:
    v = int_vector(v)
    if len(v) != gl.rank:
        raise DimensionMismatchError(f"Vector of length {len(v)} for a rank {gl.rank} module.")
    return v
