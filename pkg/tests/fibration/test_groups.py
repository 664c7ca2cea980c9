from fractions import Fraction

import pytest

import catalog
from fibration import (
    AbGroupModel,
    BlockEndo,
    GroupElement,
    coboundary_check,
    coboundary_of,
    cocycle_check,
    h1_structured,
)
from toolkit.errors import (
    DimensionMismatchError,
    NotAnActionError,
    UnsupportedActionError,
    UnsupportedParameterError,
)
from toolkit.linalg import IntMatrix


def _twist(n):
    return GroupElement.of(elliptic=[(Fraction(1, n), 0)])


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_trivial_action(n):
    a = catalog.trivial_fibration(n)
    result = h1_structured(a.model, a)
    assert result.factors == (n, n)
    assert result.invariant_factors == (n, n)
    assert result.order == n * n
    for g in result.generators:
        assert cocycle_check(a, g)
        assert not coboundary_check(a, g)


def test_negation_is_trivial():
    a = catalog.negation_fibration()
    result = h1_structured(a.model, a)
    assert result.is_trivial()
    assert result.order == 1
    assert coboundary_check(a, GroupElement.of(elliptic=[("1/3", "2/5")]))


def test_gamma_psi():
    a = catalog.gamma_psi_fibration()
    result = h1_structured(a.model, a)
    assert result.invariant_factors == (2,)
    generator = result.generators[0]
    assert generator.free == (1,)
    assert cocycle_check(a, generator)
    assert not coboundary_check(a, generator)


def test_cm_hom_rotation():
    a = catalog.cm_hom_fibration()
    result = h1_structured(a.model, a)
    assert result.factors == (2, 4, 4)
    assert result.invariant_factors == (2, 4, 4)
    assert result.order == 32
    identity_section = GroupElement.of(free=(1, 0), elliptic=[(0, 0)])
    assert cocycle_check(a, identity_section)
    assert not coboundary_check(a, identity_section)
    assert coboundary_check(a, GroupElement.of(free=(1, 1), elliptic=[(0, 0)]))
    for g in result.generators:
        assert cocycle_check(a, g)
        assert not coboundary_check(a, g)


def test_cm_hom_negated():
    model = AbGroupModel(free_rank=2, elliptic_count=1)
    a = BlockEndo(model, 2, IntMatrix([[-1, 0], [0, -1]]), elliptic_signs=(-1,))
    assert h1_structured(model, a).factors == (2, 2)


@pytest.mark.parametrize("type_number, n", [(1, 2), (3, 4), (5, 3), (7, 6)])
def test_bielliptic_twist(type_number, n):
    order, _ = catalog.bielliptic(type_number)
    assert order == n
    a = catalog.trivial_fibration(n)
    assert cocycle_check(a, _twist(n))
    assert not coboundary_check(a, _twist(n))


def test_non_cocycle():
    a = catalog.trivial_fibration(3)
    assert not cocycle_check(a, _twist(2))


def test_swapped_summands():
    model = AbGroupModel(elliptic_count=2)
    swap = BlockEndo.elliptic_from_matrix(model, 2, IntMatrix([[0, 1], [1, 0]]))
    assert h1_structured(model, swap).is_trivial()
    assert swap.orbits() == [(0, 1)]
    assert not cocycle_check(swap, GroupElement.of(elliptic=[("1/2", 0), (0, 0)]))
    both = GroupElement.of(elliptic=[("1/2", 0), ("1/2", 0)])
    assert cocycle_check(swap, both)
    assert coboundary_check(swap, both)
    order4 = BlockEndo.elliptic_from_matrix(model, 4, IntMatrix([[0, 1], [1, 0]]))
    assert h1_structured(model, order4).factors == (2, 2)


@pytest.mark.parametrize(
    "unit, modulus, expected",
    [
        (-1, 4, (2,)),
        (1, 4, (2,)),
        (-1, 3, ()),
    ],
)
def test_finite_cyclic(unit, modulus, expected):
    model = AbGroupModel(finite_cyclic=(modulus,))
    a = BlockEndo(model, 2, finite_units=(unit % modulus,))
    result = h1_structured(model, a)
    assert result.factors == expected
    for g in result.generators:
        assert cocycle_check(a, g)
        assert not coboundary_check(a, g)


def test_coboundary_of():
    t = GroupElement.of(elliptic=[("1/3", "1/5")])
    assert coboundary_of(catalog.trivial_fibration(2), t) == GroupElement.of(elliptic=[(0, 0)])
    assert coboundary_of(catalog.negation_fibration(), t) == GroupElement.of(elliptic=[("2/3", "2/5")])


def test_element_arithmetic():
    p = GroupElement.of(free=(1,), elliptic=[("3/2", "-1/4")])
    assert p.elliptic == ((Fraction(1, 2), Fraction(3, 4)),)
    assert (p + p).elliptic == ((Fraction(0), Fraction(1, 2)),)
    assert (p - p) == GroupElement.of(free=(0,), elliptic=[(0, 0)])
    assert p.scale(3).free == (3,)


def test_element_must_fit_model():
    a = catalog.trivial_fibration(2)
    with pytest.raises(DimensionMismatchError):
        cocycle_check(a, GroupElement.of(free=(1,)))


def test_elliptic_action_must_be_signed_permutation():
    with pytest.raises(UnsupportedActionError):
        BlockEndo.elliptic_from_matrix(AbGroupModel(elliptic_count=1), 2, IntMatrix([[2]]))
    with pytest.raises(UnsupportedActionError):
        BlockEndo.elliptic_from_matrix(AbGroupModel(elliptic_count=2), 2, IntMatrix([[1, 1], [0, 1]]))


@pytest.mark.parametrize(
    "kwargs, error",
    [
        ({"model": AbGroupModel(elliptic_count=1), "order": 3, "elliptic_signs": (-1,)}, NotAnActionError),
        ({"model": AbGroupModel(elliptic_count=1), "order": 0}, NotAnActionError),
        ({"model": AbGroupModel(finite_cyclic=(4,)), "order": 2, "finite_units": (2,)}, UnsupportedActionError),
        ({"model": AbGroupModel(elliptic_count=1), "order": 2, "elliptic_signs": (2,)}, UnsupportedActionError),
        ({"model": AbGroupModel(free_rank=1), "order": 2, "free_action": IntMatrix.identity(2)}, DimensionMismatchError),
    ],
)
def test_invalid_actions(kwargs, error):
    with pytest.raises(error):
        BlockEndo(**kwargs)


def test_model_validation():
    with pytest.raises(UnsupportedParameterError):
        AbGroupModel(free_rank=-1)
    with pytest.raises(UnsupportedParameterError):
        AbGroupModel(finite_cyclic=(1,))


def test_model_mismatch():
    a = catalog.trivial_fibration(2)
    with pytest.raises(DimensionMismatchError):
        h1_structured(AbGroupModel(elliptic_count=2), a)
