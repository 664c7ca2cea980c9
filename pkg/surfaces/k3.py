from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Sequence

from lattice.core import Lattice
from toolkit.errors import (
    AmbiguousZeroPairingError,
    GensDoNotSpanError,
    OddSelfIntersectionError,
    SquareTooNegativeError,
)
from toolkit.linalg import IntMatrix, rank
from toolkit.verdict import Verdict
from units import IntVector, int_vector

# Numerical class of a divisor in a fixed Picard lattice
DivisorClass = IntVector

H0_ASSUMPTION = "h0(s - s_i) > 0 assumed for every generator s_i (not decidable from the lattice)"


class Effectivity(Enum):
    EFFECTIVE = "effective"
    ANTI_EFFECTIVE = "anti-effective"
    ZERO = "zero"


class PairCheck(NamedTuple):
    index: int
    s_dot_gen: int
    s_dot_rest: int
    rest_square: int


@dataclass(frozen=True)
class AmpleCertificate:
    """
    Numerical ampleness evidence for s against a spanning set of effective
    classes s_i: s^2 > 0, s.s_i > 0, s.(s - s_i) > 0 and (s - s_i)^2 >= -2.
    """

    s: DivisorClass
    self_int: int
    pair_checks: tuple[PairCheck, ...]
    verdict: Verdict
    reason: str | None = None
    assumptions: tuple[str, ...] = field(default=(H0_ASSUMPTION,))

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


def genus(L: Lattice, c: Sequence[int]) -> int:
    """
    Arithmetic genus c^2 / 2 + 1 of a curve class on a K3 surface.

    :raises OddSelfIntersectionError: if c^2 is odd
    """
    square = L.square(c)
    if square % 2:
        raise OddSelfIntersectionError(f"Class {tuple(c)} has odd square {square}.")
    return square // 2 + 1


def euler_characteristic(L: Lattice, c: Sequence[int]) -> int:
    """
    chi(O(c)) = c^2 / 2 + 2 by Riemann-Roch on a K3 surface.
    """
    square = L.square(c)
    if square % 2:
        raise OddSelfIntersectionError(f"Class {tuple(c)} has odd square {square}.")
    return square // 2 + 2


def is_nodal_class(L: Lattice, c: Sequence[int]) -> bool:
    return L.square(c) == -2


def effectivity(L: Lattice, c: Sequence[int], ample: Sequence[int]) -> Effectivity:
    """
    Decides which of c, -c is effective, for c^2 >= -2, by the sign of its
    pairing with an ample class.

    :raises SquareTooNegativeError: if c^2 < -2
    :raises AmbiguousZeroPairingError: if c != 0 is orthogonal to the ample class
    """
    c = int_vector(c)
    if not any(c):
        return Effectivity.ZERO
    square = L.square(c)
    if square < -2:
        raise SquareTooNegativeError(f"Class {c} has square {square} < -2.")
    d = L.pair(ample, c)
    if d > 0:
        return Effectivity.EFFECTIVE
    if d < 0:
        return Effectivity.ANTI_EFFECTIVE
    raise AmbiguousZeroPairingError(f"Class {c} pairs to 0 with the ample class {tuple(ample)}.")


def nakai_certificate(L: Lattice, s: Sequence[int], gens: Sequence[Sequence[int]]) -> AmpleCertificate:
    """
    Checks the numerical conditions for s to be ample against generators
    of the Picard group that are assumed effective.

    :param L: Picard lattice
    :param s: candidate ample class
    :param gens: effective classes spanning L over Q
    :raises GensDoNotSpanError: if gens have rank below L.rank
    """
    s = int_vector(s)
    gens = [int_vector(g) for g in gens]
    if not gens or rank(IntMatrix(gens, cols=L.rank)) != L.rank:
        raise GensDoNotSpanError(f"{len(gens)} generators do not span a rank {L.rank} lattice.")

    self_int = L.square(s)
    checks = []
    failures = []
    if self_int <= 0:
        failures.append(f"s^2 = {self_int} <= 0")
    for i, g in enumerate(gens, start=1):
        rest = tuple(a - b for a, b in zip(s, g))
        check = PairCheck(i, L.pair(s, g), L.pair(s, rest), L.square(rest))
        checks.append(check)
        if check.s_dot_gen <= 0:
            failures.append(f"s.s_{i} = {check.s_dot_gen} <= 0")
        if check.s_dot_rest <= 0:
            failures.append(f"s.(s - s_{i}) = {check.s_dot_rest} <= 0")
        if check.rest_square < -2:
            failures.append(f"(s - s_{i})^2 = {check.rest_square} < -2")

    return AmpleCertificate(
        s=s,
        self_int=self_int,
        pair_checks=tuple(checks),
        verdict=Verdict.FAIL if failures else Verdict.PASS,
        reason="; ".join(failures) or None,
    )
