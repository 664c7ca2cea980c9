import pytest

from lattice import (
    Embedding,
    basis_extension,
    check_isometric,
    hyperbolic_square,
    is_primitive,
    orthogonal_complement,
    saturation,
)
from toolkit.errors import DimensionMismatchError
from toolkit.linalg import IntMatrix, det, hstack


def test_case_embeddings(geometric_case):
    e = geometric_case.embedding
    assert check_isometric(e)
    assert is_primitive(e)


def test_complement(geometric_case):
    e = geometric_case.embedding
    result = orthogonal_complement(e)
    T = result.complement.matrix
    assert T.cols == 22 - e.rank
    assert (e.matrix.T @ e.target.gram @ T).is_zero()
    assert result.pic_plus_t_det != 0
    assert result.complement.source.gram == T.T @ e.target.gram @ T


def test_basis_extension(geometric_case):
    P = geometric_case.embedding.matrix
    W = basis_extension(P)
    assert W.cols == 22 - P.cols
    assert abs(det(hstack(P, W))) == 1


def test_non_primitive():
    target = hyperbolic_square()
    e = Embedding.from_images(target, IntMatrix.from_columns([(2, 0, 0, 0)]))
    assert check_isometric(e)
    assert not is_primitive(e)
    assert basis_extension(e.matrix) is None
    assert saturation(e).column(0) == (1, 0, 0, 0)


def test_saturation_of_primitive_is_same_span():
    target = hyperbolic_square()
    e = Embedding.from_images(target, IntMatrix.from_columns([(1, 2, 0, 0)]))
    assert saturation(e).column(0) == (1, 2, 0, 0)


def test_not_isometric():
    target = hyperbolic_square()
    e = Embedding(hyperbolic_square(), target, IntMatrix.identity(4).scale(2))
    assert not check_isometric(e)


def test_shape_mismatch(k3):
    with pytest.raises(DimensionMismatchError):
        Embedding(hyperbolic_square(), k3, IntMatrix.identity(4))
