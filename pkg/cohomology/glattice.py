from __future__ import annotations

from dataclasses import dataclass

from lattice.core import Lattice
from toolkit.errors import DimensionMismatchError, NotAnActionError
from toolkit.linalg import IntMatrix, unimodular_inverse


@dataclass(frozen=True)
class GLattice:
    """
    A lattice with an isometry sigma of order dividing n.

    sigma's columns are the images of the basis vectors.
    """

    lattice: Lattice
    sigma: IntMatrix
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise NotAnActionError(f"Group order must be at least 1, got {self.order}.")
        if self.sigma.shape != (self.lattice.rank, self.lattice.rank):
            raise DimensionMismatchError(
                f"Action is {self.sigma.rows}x{self.sigma.cols} on a rank {self.lattice.rank} lattice."
            )
        if not self.sigma.power(self.order).is_identity():
            raise NotAnActionError(f"sigma^{self.order} is not the identity.")
        if self.sigma.T @ self.lattice.gram @ self.sigma != self.lattice.gram:
            raise NotAnActionError("sigma is not an isometry of the lattice.")

    @classmethod
    def from_module(cls, sigma: IntMatrix, order: int) -> GLattice:
        """
        Wraps a bare Z[G]-module by giving it an invariant form.
        """
        return cls(Lattice(invariant_gram(sigma, order)), sigma, order)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def act(self, v, times: int = 1) -> tuple[int, ...]:
        return self.sigma.power(times % self.order).apply(v)

    def conjugate(self, P: IntMatrix) -> GLattice:
        """
        The same module in the basis given by the columns of the unimodular P.
        """
        P_inv = unimodular_inverse(P)
        return GLattice(Lattice(P.T @ self.lattice.gram @ P), P_inv @ self.sigma @ P, self.order)


def invariant_gram(sigma: IntMatrix, order: int) -> IntMatrix:
    """
    sum over i < order of (sigma^i)^T sigma^i, positive definite and
    preserved by sigma.
    """
    sigma.require_square()
    if not sigma.power(order).is_identity():
        raise NotAnActionError(f"sigma^{order} is not the identity.")
    total = IntMatrix.zeros(sigma.rows, sigma.rows)
    power = IntMatrix.identity(sigma.rows)
    for _ in range(order):
        total = total + power.T @ power
        power = power @ sigma
    return total
