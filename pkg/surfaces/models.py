from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import constants
from lattice.core import Lattice
from toolkit.errors import DimensionMismatchError, UnsupportedParameterError
from units import IntVector, RatVector, rat_vector

# Rational-coefficient class in a surface's numerical Picard model
QDivisor = RatVector


@dataclass(frozen=True)
class SurfaceModel:
    """
    Numerical Picard lattice of a surface with its canonical class.

    test_curves are effective classes that -K_A must be positive on for a
    numerical del Pezzo verdict.
    """

    name: str
    pic: Lattice
    k_class: QDivisor
    test_curves: tuple[IntVector, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "k_class", rat_vector(self.k_class))
        if len(self.k_class) != self.pic.rank:
            raise DimensionMismatchError(f"K has {len(self.k_class)} coordinates, Picard rank is {self.pic.rank}.")
        for curve in self.test_curves:
            if len(curve) != self.pic.rank:
                raise DimensionMismatchError(f"Test curve {curve} has the wrong length.")

    @property
    def rank(self) -> int:
        return self.pic.rank

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        """
        Intersection number of rational classes.
        """
        x, y = rat_vector(x), rat_vector(y)
        if len(x) != self.rank or len(y) != self.rank:
            raise DimensionMismatchError(f"Classes of lengths {len(x)}, {len(y)} on a rank {self.rank} model.")
        return sum(
            (x[i] * self.pic.gram[i, j] * y[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    def basis_class(self, label: str) -> IntVector:
        labels = self.pic.labels or ()
        if label not in labels:
            raise KeyError(f"{self.name} has no basis class {label}; classes are {labels}.")
        i = labels.index(label)
        return tuple(int(j == i) for j in range(self.rank))


def surface_p2() -> SurfaceModel:
    return SurfaceModel("P2", Lattice.of([[1]], ["H"]), (-3,), ((1,),))


def surface_quadric() -> SurfaceModel:
    """
    P1 x P1 in the basis of the two rulings.
    """
    return SurfaceModel("P1xP1", Lattice.of([[0, 1], [1, 0]], ["A", "B"]), (-2, -2), ((1, 0), (0, 1)))


def surface_hirzebruch(n: int) -> SurfaceModel:
    """
    F_n in the basis C0 (the negative section, C0^2 = -n) and F (a fibre).

    K = -2 C0 - (n + 2) F, so that K^2 = 8.
    """
    if n < 0:
        raise UnsupportedParameterError(f"Hirzebruch surfaces need n >= 0, got {n}.")
    return SurfaceModel(
        f"F{n}",
        Lattice.of([[-n, 1], [1, 0]], ["C0", "F"]),
        (-2, -(n + 2)),
        ((1, 0), (0, 1)),
    )


def surface_ruled_elliptic(deg_e: int) -> SurfaceModel:
    """
    Ruled surface over an elliptic curve, basis C0 (a section) and F (a fibre).

    deg_e = 0 is the split case E x P1 with K = -2 C0; deg_e = 1 has
    C0^2 = 1 and K = -2 C0 + F.
    """
    if deg_e == 0:
        return SurfaceModel("ExP1", Lattice.of([[0, 1], [1, 0]], ["C0", "F"]), (-2, 0), ((1, 0), (0, 1)))
    if deg_e == 1:
        return SurfaceModel("P(E1)", Lattice.of([[1, 1], [1, 0]], ["C0", "F"]), (-2, 1), ((1, 0), (0, 1)))
    raise UnsupportedParameterError(f"Ruled elliptic models exist for deg E in (0, 1), got {deg_e}.")


def surface_rational_elliptic() -> SurfaceModel:
    """
    P2 blown up in nine points: basis H, E1..E9, K = -3H + sum E_i.
    """
    size = constants.RATIONAL_ELLIPTIC_RANK
    gram = [[0] * size for _ in range(size)]
    gram[0][0] = 1
    for i in range(1, size):
        gram[i][i] = -1
    exceptional = tuple(tuple(int(j == i) for j in range(size)) for i in range(1, size))
    return SurfaceModel(
        "RationalElliptic",
        Lattice.of(gram, ["H", *(f"E{i}" for i in range(1, size))]),
        (-3, *([1] * (size - 1))),
        ((1, *([0] * (size - 1))), *exceptional),
    )


def hirzebruch_index(self_intersection: int) -> int:
    """
    A Hirzebruch surface carrying an irreducible curve of square -n < 0 is F_n.
    """
    if self_intersection >= 0:
        raise UnsupportedParameterError(f"Expected a negative self-intersection, got {self_intersection}.")
    return -self_intersection


def recognize_quotient(lattice: Lattice) -> str | None:
    """
    Names the surface whose Picard lattice has the given Gram in one of the
    standard bases: P2 ([1]), P1xP1 (H) or F_n ([[-n, 1], [1, 0]]).
    """
    rows = lattice.gram.to_rows()
    if rows == [[1]]:
        return "P2"
    if rows == [[0, 1], [1, 0]]:
        return "P1xP1"
    if lattice.rank == 2 and rows[0][1] == rows[1][0] == 1 and rows[1][1] == 0 and rows[0][0] < 0:
        return f"F{hirzebruch_index(rows[0][0])}"
    return None
