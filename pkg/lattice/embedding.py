from __future__ import annotations

from dataclasses import dataclass

from lattice.core import Lattice
from toolkit.errors import DimensionMismatchError
from toolkit.linalg import IntMatrix, det, hstack, integer_kernel, snf, unimodular_inverse
from utils.local_logger import LocalLogger

log = LocalLogger("Embedding")


@dataclass(frozen=True)
class Embedding:
    """
    A map source -> target given by an integer matrix whose columns are the
    images of the source basis, written in target coordinates.
    """

    source: Lattice
    target: Lattice
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.rank, self.source.rank):
            raise DimensionMismatchError(
                f"Embedding matrix is {self.matrix.rows}x{self.matrix.cols}, "
                f"expected {self.target.rank}x{self.source.rank}."
            )

    @classmethod
    def from_images(cls, target: Lattice, images: IntMatrix, labels: tuple[str, ...] | None = None) -> Embedding:
        """
        Builds the embedding whose source carries the induced form.
        """
        gram = images.T @ target.gram @ images
        return cls(Lattice(gram, labels), target, images)

    @property
    def rank(self) -> int:
        return self.source.rank

    def image(self, v) -> tuple[int, ...]:
        return self.matrix.apply(v)

    def induced_gram(self) -> IntMatrix:
        return self.matrix.T @ self.target.gram @ self.matrix


@dataclass(frozen=True)
class ComplementResult:
    complement: Embedding
    pic_plus_t_det: int


def check_isometric(e: Embedding) -> bool:
    """
    P^T G_target P == G_source
    """
    return e.induced_gram() == e.source.gram


def is_primitive(e: Embedding) -> bool:
    """
    The cokernel target / image(e) is torsion-free iff the Smith form of
    the embedding matrix has full rank with every invariant factor 1.
    """
    factors = snf(e.matrix).invariant_factors
    return len(factors) == e.rank and all(d == 1 for d in factors)


def orthogonal_complement(e: Embedding) -> ComplementResult:
    """
    T = integer_kernel(P^T G): everything pairing to zero with the image.

    pic_plus_t_det is det([P | T]), or 0 when [P | T] is not square.
    """
    T = integer_kernel(e.matrix.T @ e.target.gram)
    complement = Embedding.from_images(e.target, T)
    frame = hstack(e.matrix, T)
    frame_det = det(frame) if frame.is_square() else 0
    log.debug(f"complement of a rank {e.rank} sublattice has rank {T.cols}, det[P|T] = {frame_det}")
    return ComplementResult(complement, frame_det)


def saturation(e: Embedding) -> IntMatrix:
    """
    Basis of (image tensor Q) intersected with the target.
    """
    annihilator = integer_kernel(e.matrix.T)
    return integer_kernel(annihilator.T)


def basis_extension(matrix: IntMatrix) -> IntMatrix | None:
    """
    Integer columns W with det([matrix | W]) = +-1, or None when the columns
    of matrix do not span a direct summand.
    """
    result = snf(matrix)
    if len(result.invariant_factors) != matrix.cols or any(d != 1 for d in result.invariant_factors):
        return None
    # matrix = U^-1 D V^-1 with D = [I; 0], so the first columns of U^-1
    # span the image and the rest complete it
    U_inv = unimodular_inverse(result.U)
    return U_inv.select(cols=range(matrix.cols, matrix.rows))
