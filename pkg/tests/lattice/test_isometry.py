import json

import pytest

import catalog
import config
import constants
from lattice import (
    HODGE_ASSUMPTION,
    Embedding,
    extend_by_minus_one,
    find_nonintegral_witness,
    fixes_vector,
    hyperbolic_square,
    orthogonal_complement,
)
from toolkit.errors import ActionNotIsometricError, DimensionMismatchError, SingularFrameError
from toolkit.linalg import IntMatrix
from toolkit.utils.toolkit_math import random_unimodular


def _extend(case):
    return extend_by_minus_one(case.embedding.target, case.embedding, case.action)


def test_case_extensions(geometric_case):
    result = _extend(geometric_case)
    assert result.integral
    assert result.orthogonal
    assert result.involutive
    assert result.phi_integer is not None
    assert fixes_vector(result, geometric_case.ample, geometric_case.embedding)
    assert result.assumptions == (HODGE_ASSUMPTION,)


@pytest.mark.parametrize("n", range(constants.Q_MIN_RANK, constants.Q_RANK + 1))
def test_sextic_extension_is_integral(n):
    result = _extend(catalog.sextic(n))
    assert result.integral and result.orthogonal and result.involutive


def test_sextic18_matches_pinned_matrix(sextic18):
    expected = json.loads((config.CORPUS_DIR / "sextic-n18" / "isometry" / "expected.json").read_text())
    rows = [[int(x) for x in row] for row in expected["expected"]["phi"]]
    assert _extend(sextic18).phi_integer == IntMatrix(rows)


def test_phi_maps_images_by_the_action(quadric_case):
    e = quadric_case.embedding
    phi = _extend(quadric_case).phi_integer
    for i in range(e.rank):
        assert phi.apply(e.image(tuple(int(i == j) for j in range(e.rank)))) == e.image(quadric_case.action.column(i))


def test_independent_of_complement_basis(rng, f2_case):
    e = f2_case.embedding
    T = orthogonal_complement(e).complement.matrix
    reference = _extend(f2_case).phi
    for _ in range(constants.EXTENSION_PROPERTY_CASES):
        other = T @ random_unimodular(rng, T.cols)
        assert extend_by_minus_one(e.target, e, f2_case.action, complement=other).phi == reference


def test_action_not_isometric(quadric_case):
    e = quadric_case.embedding
    with pytest.raises(ActionNotIsometricError):
        extend_by_minus_one(e.target, e, IntMatrix.identity(4).scale(2))


def test_action_shape(quadric_case):
    e = quadric_case.embedding
    with pytest.raises(DimensionMismatchError):
        extend_by_minus_one(e.target, e, IntMatrix.identity(3))


def test_isotropic_frame_is_singular():
    target = hyperbolic_square()
    pic = Embedding.from_images(target, IntMatrix.from_columns([(1, 0, 0, 0)]))
    with pytest.raises(SingularFrameError):
        extend_by_minus_one(target, pic, IntMatrix([[1]]))


def test_witness():
    pic, action = catalog.nonintegral_witness()
    result = extend_by_minus_one(pic.target, pic, action)
    assert pic.source.gram == IntMatrix([[4]])
    assert not result.integral
    assert result.orthogonal
    assert result.involutive
    assert result.phi_integer is None


def test_witness_search():
    found = find_nonintegral_witness()
    assert found is not None
    pic, action, result = found
    assert not result.integral
    assert pic.matrix.column(0) == (0, 0, 1, -2)
    assert action == IntMatrix([[1]])


def test_witness_search_bound_zero_finds_nothing():
    assert find_nonintegral_witness(bound=0) is None
