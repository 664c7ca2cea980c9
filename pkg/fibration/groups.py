from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from cohomology.glattice import GLattice
from cohomology.h1 import h1
from toolkit.errors import DimensionMismatchError, NotAnActionError, UnsupportedActionError, UnsupportedParameterError
from toolkit.linalg import IntMatrix, integer_kernel, snf, solve_integer
from units import IntVector, int_vector, to_rational
from utils.local_logger import LocalLogger

log = LocalLogger("SectionGroups")

# A point of an elliptic summand, known only through its torsion
# coordinates in (Q/Z)^2.
TorsionPoint = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class AbGroupModel:
    """
    Z^free_rank + sum Z/m_i + E^elliptic_count, where each elliptic summand is
    divisible with m-torsion (Z/m)^2.
    """

    free_rank: int = 0
    finite_cyclic: tuple[int, ...] = ()
    elliptic_count: int = 0

    def __post_init__(self):
        object.__setattr__(self, "finite_cyclic", tuple(self.finite_cyclic))
        if self.free_rank < 0 or self.elliptic_count < 0:
            raise UnsupportedParameterError("Ranks must be nonnegative.")
        if any(m < 2 for m in self.finite_cyclic):
            raise UnsupportedParameterError(f"Cyclic moduli must be at least 2, got {self.finite_cyclic}.")


@dataclass(frozen=True)
class GroupElement:
    free: IntVector = ()
    finite: IntVector = ()
    elliptic: tuple[TorsionPoint, ...] = ()

    @classmethod
    def of(cls, free: Sequence = (), finite: Sequence = (), elliptic: Sequence[Sequence] = ()) -> GroupElement:
        return cls(
            int_vector(free),
            int_vector(finite),
            tuple((_unit_interval(to_rational(a)), _unit_interval(to_rational(b))) for a, b in elliptic),
        )

    @classmethod
    def zero(cls, model: AbGroupModel) -> GroupElement:
        return cls.of((0,) * model.free_rank, (0,) * len(model.finite_cyclic), [(0, 0)] * model.elliptic_count)

    def check(self, model: AbGroupModel) -> GroupElement:
        if (len(self.free), len(self.finite), len(self.elliptic)) != (
            model.free_rank,
            len(model.finite_cyclic),
            model.elliptic_count,
        ):
            raise DimensionMismatchError(f"Element {self} does not belong to {model}.")
        return GroupElement(
            self.free,
            tuple(x % m for x, m in zip(self.finite, model.finite_cyclic)),
            tuple((_unit_interval(to_rational(a)), _unit_interval(to_rational(b))) for a, b in self.elliptic),
        )

    def __add__(self, other: GroupElement) -> GroupElement:
        return GroupElement(
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.finite, other.finite)),
            tuple(
                (_unit_interval(p[0] + q[0]), _unit_interval(p[1] + q[1]))
                for p, q in zip(self.elliptic, other.elliptic)
            ),
        )

    def __neg__(self) -> GroupElement:
        return self.scale(-1)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def scale(self, k: int) -> GroupElement:
        return GroupElement(
            tuple(k * a for a in self.free),
            tuple(k * a for a in self.finite),
            tuple((_unit_interval(k * a), _unit_interval(k * b)) for a, b in self.elliptic),
        )


@dataclass(frozen=True)
class BlockEndo:
    """
    A block-diagonal automorphism of order n: an integer matrix on the free
    part, x -> u x on each Z/m, and on elliptic summands point j goes to
    summand elliptic_permutation[j] multiplied by elliptic_signs[j].
    """

    model: AbGroupModel
    order: int
    free_action: IntMatrix | None = None
    finite_units: tuple[int, ...] = ()
    elliptic_signs: tuple[int, ...] = ()
    elliptic_permutation: tuple[int, ...] = ()

    def __post_init__(self):
        model = self.model
        if self.free_action is None:
            object.__setattr__(self, "free_action", IntMatrix.identity(model.free_rank))
        if not self.finite_units:
            object.__setattr__(self, "finite_units", (1,) * len(model.finite_cyclic))
        if not self.elliptic_signs:
            object.__setattr__(self, "elliptic_signs", (1,) * model.elliptic_count)
        if not self.elliptic_permutation:
            object.__setattr__(self, "elliptic_permutation", tuple(range(model.elliptic_count)))

        if self.free_action.shape != (model.free_rank, model.free_rank):
            raise DimensionMismatchError(f"Free action is {self.free_action.shape}, rank is {model.free_rank}.")
        if len(self.finite_units) != len(model.finite_cyclic):
            raise DimensionMismatchError("One unit per finite cyclic summand is needed.")
        if len(self.elliptic_signs) != model.elliptic_count or len(self.elliptic_permutation) != model.elliptic_count:
            raise DimensionMismatchError("One sign and one target per elliptic summand are needed.")
        if any(s not in (1, -1) for s in self.elliptic_signs):
            raise UnsupportedActionError(f"Elliptic blocks must act by +-1, got signs {self.elliptic_signs}.")
        if sorted(self.elliptic_permutation) != list(range(model.elliptic_count)):
            raise UnsupportedActionError(f"{self.elliptic_permutation} is not a permutation of the elliptic summands.")
        for u, m in zip(self.finite_units, model.finite_cyclic):
            if math.gcd(u, m) != 1:
                raise UnsupportedActionError(f"{u} is not a unit modulo {m}.")

        if self.order < 1 or not self._is_identity_power(self.order):
            raise NotAnActionError(f"The action does not have order dividing {self.order}.")

    @classmethod
    def elliptic_from_matrix(cls, model: AbGroupModel, order: int, matrix: IntMatrix, **kwargs) -> BlockEndo:
        """
        Reads a signed permutation matrix on the elliptic summands.

        :raises UnsupportedActionError: for any other matrix
        """
        if matrix.shape != (model.elliptic_count, model.elliptic_count):
            raise DimensionMismatchError(f"Elliptic action is {matrix.shape}, count is {model.elliptic_count}.")
        signs, targets = [], []
        for j, column in enumerate(matrix.columns()):
            nonzero = [(i, x) for i, x in enumerate(column) if x != 0]
            if len(nonzero) != 1 or nonzero[0][1] not in (1, -1):
                raise UnsupportedActionError(
                    f"Column {j} of the elliptic action is not +-1 times a basis vector; "
                    "only block actions are supported."
                )
            targets.append(nonzero[0][0])
            signs.append(nonzero[0][1])
        return cls(model, order, elliptic_signs=tuple(signs), elliptic_permutation=tuple(targets), **kwargs)

    def apply(self, s: GroupElement) -> GroupElement:
        s = s.check(self.model)
        elliptic: list[TorsionPoint] = [(Fraction(0), Fraction(0))] * self.model.elliptic_count
        for j, (a, b) in enumerate(s.elliptic):
            sign = self.elliptic_signs[j]
            elliptic[self.elliptic_permutation[j]] = (_unit_interval(sign * a), _unit_interval(sign * b))
        return GroupElement(
            self.free_action.apply(s.free),
            tuple((u * x) % m for u, x, m in zip(self.finite_units, s.finite, self.model.finite_cyclic)),
            tuple(elliptic),
        ).check(self.model)

    def norm(self, s: GroupElement) -> GroupElement:
        total = GroupElement.zero(self.model)
        current = s.check(self.model)
        for _ in range(self.order):
            total = total + current
            current = self.apply(current)
        return total.check(self.model)

    def orbits(self) -> list[tuple[int, ...]]:
        """
        Cycles of the permutation on elliptic summands, each listed from its
        smallest member.
        """
        seen, out = set(), []
        for start in range(self.model.elliptic_count):
            if start in seen:
                continue
            cycle, j = [], start
            while j not in seen:
                seen.add(j)
                cycle.append(j)
                j = self.elliptic_permutation[j]
            out.append(tuple(cycle))
        return out

    def _is_identity_power(self, n: int) -> bool:
        if not self.free_action.power(n).is_identity():
            return False
        if any(pow(u, n, m) != 1 % m for u, m in zip(self.finite_units, self.model.finite_cyclic)):
            return False
        for cycle in self.orbits():
            if n % len(cycle):
                return False
            sign = 1
            for j in cycle:
                sign *= self.elliptic_signs[j]
            if sign ** (n // len(cycle)) != 1:
                return False
        return True


@dataclass(frozen=True)
class GroupCohomology:
    """
    H^1 of a block action, one cyclic factor per component, with a
    generating cocycle for each.
    """

    factors: tuple[int, ...]
    generators: tuple[GroupElement, ...] = field(default=())
    free_rank: int = 0

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        if not self.factors:
            return ()
        diagonal = snf(IntMatrix.diag(self.factors)).invariant_factors
        return tuple(d for d in diagonal if d > 1)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    def is_trivial(self) -> bool:
        return not self.factors and not self.free_rank


def h1_structured(m: AbGroupModel, a: BlockEndo) -> GroupCohomology:
    """
    Componentwise H^1:

    free part: cyclic cohomology of the lattice;
    Z/m with x -> u x: ker N / im (1 - u);
    an orbit of k elliptic summands with sign product e: (Z/(n/k))^2 when
    e = 1 (trivial action of the stabilizer), 0 when e = -1 (1 - sigma^k is
    multiplication by 2, surjective on a divisible group).
    """
    if a.model != m:
        raise DimensionMismatchError("Action belongs to a different group model.")
    factors: list[int] = []
    generators: list[GroupElement] = []
    zero = GroupElement.zero(m)

    if m.free_rank:
        free = h1(GLattice.from_module(a.free_action, a.order))
        for d, g in zip(free.invariant_factors, free.generators):
            factors.append(d)
            generators.append(GroupElement(g, zero.finite, zero.elliptic))

    for i, (modulus, unit) in enumerate(zip(m.finite_cyclic, a.finite_units)):
        norm = sum(pow(unit, k, modulus) for k in range(a.order)) % modulus
        kernel_size = math.gcd(norm, modulus)
        image_size = modulus // math.gcd(1 - unit, modulus)
        size = kernel_size // image_size
        if size > 1:
            finite = list(zero.finite)
            finite[i] = modulus // kernel_size
            factors.append(size)
            generators.append(GroupElement(zero.free, tuple(finite), zero.elliptic))

    for cycle in a.orbits():
        sign = math.prod(a.elliptic_signs[j] for j in cycle)
        stabilizer_order = a.order // len(cycle)
        if sign == 1 and stabilizer_order > 1:
            t = Fraction(1, stabilizer_order)
            for point in ((t, Fraction(0)), (Fraction(0), t)):
                elliptic = list(zero.elliptic)
                elliptic[cycle[0]] = point
                factors.append(stabilizer_order)
                generators.append(GroupElement(zero.free, zero.finite, tuple(elliptic)))

    log.debug(f"structured H1 factors {factors}")
    return GroupCohomology(tuple(factors), tuple(generators))


def cocycle_check(a: BlockEndo, s: GroupElement) -> bool:
    """
    s + sigma(s) + ... + sigma^(n-1)(s) == 0
    """
    return a.norm(s) == GroupElement.zero(a.model)


def coboundary_check(a: BlockEndo, s: GroupElement) -> bool:
    """
    s in im(1 - sigma), decided blockwise.

    On the elliptic part, s lifts to s~ in Q^e per torsion coordinate and
    lies in the image iff some integer shift of s~ is in the rational image
    of M = 1 - sigma: with Y a basis of the left kernel of M, iff Y s~ lies
    in the integer span of Y.
    """
    s = s.check(a.model)
    model = a.model

    if model.free_rank:
        difference = IntMatrix.identity(model.free_rank) - a.free_action
        if solve_integer(difference, s.free) is None:
            return False

    for x, unit, modulus in zip(s.finite, a.finite_units, model.finite_cyclic):
        if x % math.gcd(1 - unit, modulus):
            return False

    if model.elliptic_count:
        M = IntMatrix.identity(model.elliptic_count) - _elliptic_matrix(a)
        Y = integer_kernel(M.T).T
        for coordinate in (0, 1):
            lift = [p[coordinate] for p in s.elliptic]
            if not _shift_in_rational_image(Y, lift):
                return False
    return True


def coboundary_of(a: BlockEndo, t: GroupElement) -> GroupElement:
    """
    t - sigma(t)
    """
    return (t.check(a.model) - a.apply(t)).check(a.model)


def _elliptic_matrix(a: BlockEndo) -> IntMatrix:
    size = a.model.elliptic_count
    rows = [[0] * size for _ in range(size)]
    for j in range(size):
        rows[a.elliptic_permutation[j]][j] = a.elliptic_signs[j]
    return IntMatrix(rows, cols=size)


def _shift_in_rational_image(Y: IntMatrix, lift: Sequence[Fraction]) -> bool:
    if Y.rows == 0:
        return True
    values = [sum((Y[i, j] * lift[j] for j in range(Y.cols)), Fraction(0)) for i in range(Y.rows)]
    if any(v.denominator != 1 for v in values):
        return False
    return solve_integer(Y, [-int(v) for v in values]) is not None


def _unit_interval(x: Fraction) -> Fraction:
    return x - math.floor(x)
