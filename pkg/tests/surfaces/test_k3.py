import pytest

import catalog
from lattice import Lattice, build_H, build_Q
from surfaces import (
    H0_ASSUMPTION,
    Effectivity,
    effectivity,
    euler_characteristic,
    genus,
    is_nodal_class,
    nakai_certificate,
)
from toolkit.errors import (
    AmbiguousZeroPairingError,
    GensDoNotSpanError,
    OddSelfIntersectionError,
    SquareTooNegativeError,
)
from toolkit.utils.toolkit_math import box_vectors
from toolkit.verdict import Verdict

Q3 = build_Q(3)
S = (1, 1, 0)


def test_genus_and_euler():
    assert genus(Q3, S) == 2
    assert euler_characteristic(Q3, S) == 3
    assert genus(Q3, (1, 0, 0)) == 0
    assert is_nodal_class(Q3, (1, 0, 0))
    assert not is_nodal_class(Q3, S)


def test_odd_square():
    with pytest.raises(OddSelfIntersectionError):
        genus(Lattice.of([[1]]), (1,))
    with pytest.raises(OddSelfIntersectionError):
        euler_characteristic(Lattice.of([[1]]), (1,))


@pytest.mark.parametrize(
    "c, expected",
    [
        ((1, 0, 0), Effectivity.EFFECTIVE),
        ((0, 1, 0), Effectivity.EFFECTIVE),
        ((0, 0, 1), Effectivity.EFFECTIVE),
        ((1, 1, -1), Effectivity.EFFECTIVE),
        ((-1, 0, 0), Effectivity.ANTI_EFFECTIVE),
        ((0, 0, 0), Effectivity.ZERO),
    ],
)
def test_effectivity(c, expected):
    assert effectivity(Q3, c, S) is expected


def test_square_too_negative():
    with pytest.raises(SquareTooNegativeError):
        effectivity(Q3, (1, 0, -1), S)


def test_ambiguous_zero_pairing():
    with pytest.raises(AmbiguousZeroPairingError):
        effectivity(build_H(), (1, -1), (1, 1))


def test_nakai_sextic():
    cert = nakai_certificate(Q3, S, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert cert.passed
    assert cert.self_int == 2
    assert cert.reason is None
    assert [(c.s_dot_gen, c.s_dot_rest, c.rest_square) for c in cert.pair_checks] == [(1, 1, -2)] * 3
    assert cert.assumptions == (H0_ASSUMPTION,)


def test_nakai_quadric(quadric_case):
    cert = nakai_certificate(quadric_case.pic, quadric_case.ample, quadric_case.effective_gens)
    assert cert.passed
    assert cert.self_int == 4
    assert [c.s_dot_gen for c in cert.pair_checks] == [2, 1, 1, 1, 1]
    assert [c.index for c in cert.pair_checks] == [1, 2, 3, 4, 5]


def test_nakai_f2(f2_case):
    cert = nakai_certificate(f2_case.pic, f2_case.ample, f2_case.effective_gens)
    assert cert.passed
    assert cert.self_int == 8
    assert all(c.s_dot_gen == 1 for c in cert.pair_checks)


def test_nakai_failure():
    cert = nakai_certificate(Q3, (1, 0, 0), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert cert.verdict is Verdict.FAIL
    assert "s^2 = -2 <= 0" in cert.reason


def test_nakai_needs_spanning_gens():
    with pytest.raises(GensDoNotSpanError):
        nakai_certificate(Q3, S, [(1, 0, 0), (2, 0, 0)])
    with pytest.raises(GensDoNotSpanError):
        nakai_certificate(Q3, S, [])


@pytest.mark.parametrize(
    "case",
    [catalog.sextic(3), catalog.sextic(4), catalog.sextic(5), catalog.quadric(), catalog.f2()],
    ids=lambda c: c.name,
)
def test_certified_ample_class_decides_effectivity(case):
    # no class of square >= -2 is orthogonal to an ample class
    assert nakai_certificate(case.pic, case.ample, case.effective_gens).passed
    for c in box_vectors(case.pic.rank, 2):
        if any(c) and case.pic.square(c) >= -2:
            assert effectivity(case.pic, c, case.ample) is not Effectivity.ZERO
