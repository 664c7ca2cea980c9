from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from cohomology.glattice import GLattice
from surfaces.models import QDivisor, SurfaceModel
from toolkit.errors import (
    DNotDividingError,
    DimensionMismatchError,
    OutOfAssertedRangeError,
    UnsupportedParameterError,
)
from toolkit.utils.toolkit_math import lcm_all
from units import IntVector, int_vector, rat_vector
from utils.local_logger import LocalLogger

log = LocalLogger("Orders")


class Irreducibility(Enum):
    """
    Whether the cyclic cover of a ramification curve is irreducible. This
    is supplied as data; it is not computable from the lattice.
    """

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class OrderClass(Enum):
    NCY = "ncy"
    DEL_PEZZO = "del-pezzo"
    OTHER = "other"


class Maximality(Enum):
    MAXIMAL = "maximal"
    AZUMAYA = "azumaya"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RamifiedDivisor:
    d_class: QDivisor
    e: int
    cover_irreducible: Irreducibility = Irreducibility.UNKNOWN

    def __post_init__(self):
        object.__setattr__(self, "d_class", rat_vector(self.d_class))
        if self.e < 2:
            raise UnsupportedParameterError(f"Ramification index must be at least 2, got {self.e}.")


@dataclass(frozen=True)
class OrderDescriptor:
    surface: SurfaceModel
    ramification: tuple[RamifiedDivisor, ...] = field(default=())
    cover_degree: int = 1

    def __post_init__(self):
        object.__setattr__(self, "ramification", tuple(self.ramification))
        for divisor in self.ramification:
            if len(divisor.d_class) != self.surface.rank:
                raise DimensionMismatchError(
                    f"Ramification class {divisor.d_class} does not live on {self.surface.name}."
                )


@dataclass(frozen=True)
class OrderClassification:
    kind: OrderClass
    k_a: QDivisor
    anti_k_square: Fraction
    test_pairings: tuple[Fraction, ...]


class RestrictionClass(NamedTuple):
    divisor: IntVector
    claimed_torsion: int
    d: int


def canonical_order_class(o: OrderDescriptor) -> QDivisor:
    """
    K_A = K_Z + sum (1 - 1/e_i) D_i
    """
    total = list(o.surface.k_class)
    for divisor in o.ramification:
        weight = 1 - Fraction(1, divisor.e)
        total = [t + weight * d for t, d in zip(total, divisor.d_class)]
    return tuple(total)


def is_numerically_trivial(model: SurfaceModel, q: Sequence) -> bool:
    q = rat_vector(q)
    return all(model.pair(q, basis) == 0 for basis in _basis(model))


def classify_order(o: OrderDescriptor) -> OrderClassification:
    """
    NCY when K_A is numerically trivial; del Pezzo when (-K_A)^2 > 0 and
    -K_A is positive on every test curve of the surface; Other otherwise.
    """
    k_a = canonical_order_class(o)
    anti = tuple(-x for x in k_a)
    anti_square = o.surface.pair(anti, anti)
    pairings = tuple(o.surface.pair(anti, c) for c in o.surface.test_curves)
    if is_numerically_trivial(o.surface, k_a):
        kind = OrderClass.NCY
    elif anti_square > 0 and all(p > 0 for p in pairings):
        kind = OrderClass.DEL_PEZZO
    else:
        kind = OrderClass.OTHER
    log.debug(f"{o.surface.name} order with {len(o.ramification)} ramification curves: {kind.value}")
    return OrderClassification(kind, k_a, anti_square, pairings)


def ramification_transfer(cover_profile: Sequence[tuple[object, int]]) -> tuple[int, ...]:
    """
    Ramification indices of the order, read off the cover: one index per
    ramified divisor, sorted.
    """
    indices = []
    for divisor, index in cover_profile:
        if index < 2:
            raise UnsupportedParameterError(f"Divisor {divisor} has ramification index {index} < 2.")
        indices.append(index)
    return tuple(sorted(indices))


def overlap_applicable(indices: Sequence[int], n: int) -> bool:
    if n < 1:
        raise UnsupportedParameterError(f"Cover degree must be positive, got {n}.")
    return lcm_all(indices) == n


def restriction_class(gl: GLattice, L: Sequence[int], d: int) -> RestrictionClass:
    """
    L + sigma(L) + ... + sigma^(d-1)(L), the line bundle defining the cyclic
    cover over a divisor with ramification index n / d; it is
    (n / d)-torsion on that divisor.

    :raises DNotDividingError: if d does not divide the group order
    """
    if d < 1 or gl.order % d:
        raise DNotDividingError(f"d = {d} does not divide n = {gl.order}.")
    L = int_vector(L)
    total = [0] * gl.rank
    current = L
    for _ in range(d):
        total = [a + b for a, b in zip(total, current)]
        current = gl.sigma.apply(current)
    return RestrictionClass(tuple(total), gl.order // d, d)


def restriction_profile(gl: GLattice, L: Sequence[int], indices: Sequence[int]) -> tuple[RestrictionClass, ...]:
    """
    restriction_class for each ramification index e, using d = n / e.
    """
    out = []
    for e in indices:
        if e < 1 or gl.order % e:
            raise DNotDividingError(f"Ramification index {e} does not divide n = {gl.order}.")
        out.append(restriction_class(gl, L, gl.order // e))
    return tuple(out)


def maximality_check(o: OrderDescriptor) -> Maximality:
    """
    Irreducible covers over every ramification curve suffice for maximality.
    The criterion is one-directional, so a failure is Unknown.
    """
    if not o.ramification:
        return Maximality.AZUMAYA
    if all(d.cover_irreducible is Irreducibility.YES for d in o.ramification):
        return Maximality.MAXIMAL
    return Maximality.UNKNOWN


def h0_hirzebruch(n: int, a: int, b: int) -> int:
    """
    h0(O(a C0 + b F)) on F_n from the pushforward to P1:
    sum over k = 0..a of max(0, b - n k + 1).
    """
    if a < 0:
        return 0
    return sum(max(0, b - n * k + 1) for k in range(a + 1))


def h0_hirzebruch2(a: int, b: int) -> int:
    """
    1 - a^2 + a b + b on F_2.

    The formula is asserted for a >= 0, b >= 2a - 1.

    :raises OutOfAssertedRangeError: outside a >= 0, b >= 2a - 1
    """
    if a < 0 or b < 2 * a - 1:
        raise OutOfAssertedRangeError(f"h0 formula on F2 is asserted for a >= 0, b >= 2a - 1; got ({a}, {b}).")
    return 1 - a * a + a * b + b


def _basis(model: SurfaceModel) -> list[IntVector]:
    return [tuple(int(i == j) for j in range(model.rank)) for i in range(model.rank)]
