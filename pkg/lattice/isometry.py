from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import config
from lattice.core import Lattice, direct_sum, build_H
from lattice.embedding import Embedding, check_isometric, orthogonal_complement
from toolkit.errors import ActionNotIsometricError, DimensionMismatchError, SingularFrameError
from toolkit.linalg import IntMatrix, RatMatrix, block_diag, det, hstack
from toolkit.utils.toolkit_math import primitive_box_vectors
from utils.local_logger import LocalLogger

log = LocalLogger("Isometry")

HODGE_ASSUMPTION = (
    "phi preserving H^{2,0} and being effective is not checked; only the lattice-side "
    "conditions (fixed ample class, -1 on the complement) are certified"
)


@dataclass(frozen=True)
class ExtensionResult:
    """
    phi = A·i·A^-1 with A = [P | T] and i = block_diag(action, -I).
    """

    phi: RatMatrix
    integral: bool
    orthogonal: bool
    involutive: bool
    phi_integer: IntMatrix | None
    assumptions: tuple[str, ...] = (HODGE_ASSUMPTION,)


def extend_by_minus_one(
    target: Lattice,
    pic: Embedding,
    action: IntMatrix,
    complement: IntMatrix | None = None,
) -> ExtensionResult:
    """
    Extends an isometry of an embedded lattice to the whole target by
    acting as -1 on the orthogonal complement.

    :param target: ambient lattice (normally the K3 lattice)
    :param pic: embedding of the Picard lattice into target
    :param action: columns are the images of the source basis, in source coordinates
    :param complement: optional basis of the complement; the saturated one is used otherwise
    :raises ActionNotIsometricError: if the action does not preserve the source form
    :raises SingularFrameError: if image and complement do not span target over Q
    """
    if pic.target.gram != target.gram:
        raise DimensionMismatchError("Embedding target differs from the given lattice.")
    if not check_isometric(pic):
        raise ActionNotIsometricError("Embedding is not isometric onto its source form.")
    if action.shape != (pic.rank, pic.rank):
        raise DimensionMismatchError(f"Action is {action.rows}x{action.cols}, expected {pic.rank}x{pic.rank}.")
    if action.T @ pic.source.gram @ action != pic.source.gram:
        raise ActionNotIsometricError("Action does not preserve the Picard form.")

    T = complement if complement is not None else orthogonal_complement(pic).complement.matrix
    frame = hstack(pic.matrix, T)
    if not frame.is_square() or det(frame) == 0:
        raise SingularFrameError(
            f"Image (rank {pic.rank}) and complement (rank {T.cols}) do not form a basis of Q^{target.rank}."
        )

    A = RatMatrix.of(frame)
    i = block_diag(action, -IntMatrix.identity(T.cols))
    phi = A @ i @ A.inverse()

    integral = phi.is_integral()
    G = RatMatrix.of(target.gram)
    orthogonal = phi.T @ G @ phi == G
    involutive = (phi @ phi).is_identity()
    log.debug(f"extension: integral={integral} orthogonal={orthogonal} involutive={involutive}")
    return ExtensionResult(
        phi=phi,
        integral=integral,
        orthogonal=orthogonal,
        involutive=involutive,
        phi_integer=phi.to_int() if integral else None,
    )


def fixes_vector(res: ExtensionResult, v_in_pic_coords: Sequence[int], pic: Embedding) -> bool:
    w = pic.image(v_in_pic_coords)
    return res.phi.apply(w) == tuple(w)


def hyperbolic_square() -> Lattice:
    """
    H + H with basis e1, f1, e2, f2 (e_i . f_i = 1).
    """
    return Lattice(direct_sum(build_H(), build_H()).gram, ("e1", "f1", "e2", "f2"))


def find_nonintegral_witness(bound: int | None = None) -> tuple[Embedding, IntMatrix, ExtensionResult] | None:
    """
    Searches primitive rank-1 sublattices of H + H, with action +1 or -1,
    for one whose extension by -1 is not integral.

    Vectors are tried in lexicographic order with coordinates in
    [-bound, bound]; isotropic vectors give a singular frame and are skipped.
    """
    bound = config.WITNESS_SEARCH_BOUND if bound is None else bound
    target = hyperbolic_square()
    for v in primitive_box_vectors(target.rank, bound):
        images = IntMatrix.from_columns([v])
        pic = Embedding.from_images(target, images, ("v",))
        for sign in (1, -1):
            action = IntMatrix([[sign]])
            try:
                result = extend_by_minus_one(target, pic, action)
            except SingularFrameError:
                continue
            if not result.integral:
                log.info(f"non-integral witness: v = {v}, action = {sign}")
                return pic, action, result
    return None
