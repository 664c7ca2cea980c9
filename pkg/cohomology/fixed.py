from cohomology.glattice import GLattice
from lattice.core import Lattice
from lattice.embedding import Embedding
from toolkit.errors import OddEntryError, UnsupportedParameterError
from toolkit.linalg import IntMatrix, integer_kernel


def fixed_sublattice(gl: GLattice) -> Embedding:
    """
    Saturated sublattice ker(sigma - 1) with its induced form.
    """
    basis = integer_kernel(gl.sigma - IntMatrix.identity(gl.rank))
    return Embedding.from_images(gl.lattice, basis)


def half_gram_quotient(gl: GLattice) -> Lattice:
    """
    Form of the quotient surface's Picard lattice for a double cover:
    pullback doubles intersections, so the fixed Gram is halved.

    :raises UnsupportedParameterError: unless the group has order 2
    :raises OddEntryError: if the fixed Gram has an odd entry
    """
    if gl.order != 2:
        raise UnsupportedParameterError(f"Half-Gram quotient needs a group of order 2, got {gl.order}.")
    gram = fixed_sublattice(gl).source.gram
    odd = [(i, j) for i in range(gram.rows) for j in range(gram.cols) if gram[i, j] % 2]
    if odd:
        raise OddEntryError(f"Fixed Gram {gram.to_rows()} has odd entries at {odd}.")
    return Lattice(IntMatrix([[x // 2 for x in row] for row in gram.to_rows()], cols=gram.cols))
