from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Union

from toolkit.errors import UnsupportedParameterError


@dataclass(frozen=True)
class TrivialFibration:
    """
    Z = E x C over C, with the section {origin} x C as zero.
    """

    fibre: str = "E"
    base: str = "C"
    origin: str = "e0"


@dataclass(frozen=True)
class ZeroSection:
    pass


@dataclass(frozen=True)
class Horizontal:
    """
    The constant section {point} x C.
    """

    point: str


@dataclass(frozen=True)
class Graph:
    """
    Graph of a map C -> E of the given degree. preimages lists the points
    of C over the origin of E, with multiplicity.
    """

    map_name: str
    degree: int
    preimages: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "preimages", tuple(self.preimages))
        if self.degree < 1 or len(self.preimages) != self.degree:
            raise UnsupportedParameterError(
                f"A degree {self.degree} map has {self.degree} preimages of the origin, got {len(self.preimages)}."
            )


SectionSymbol = Union[ZeroSection, Horizontal, Graph]


@dataclass(frozen=True)
class SectionExpr:
    """
    Integer combination of sections under the group law.
    """

    terms: tuple[tuple[SectionSymbol, int], ...]

    @classmethod
    def single(cls, symbol: SectionSymbol, coefficient: int = 1) -> SectionExpr:
        return cls(((symbol, coefficient),))


@dataclass(frozen=True)
class FormalDivisor:
    """
    Integer combination of named curves; the line bundle O(sum a_i C_i).
    """

    terms: tuple[tuple[str, int], ...] = field(default=())

    @classmethod
    def of(cls, coefficients: Mapping[str, int]) -> FormalDivisor:
        return cls(tuple((k, v) for k, v in coefficients.items() if v != 0))

    def as_dict(self) -> dict[str, int]:
        return dict(self.terms)

    def __add__(self, other: FormalDivisor) -> FormalDivisor:
        total = Counter(self.as_dict())
        total.update(other.as_dict())
        return FormalDivisor.of(total)

    def scale(self, k: int) -> FormalDivisor:
        return FormalDivisor.of({name: k * a for name, a in self.terms})

    def is_trivial(self) -> bool:
        return not self.terms

    def render(self) -> str:
        if not self.terms:
            return "O"
        parts = []
        for i, (name, a) in enumerate(self.terms):
            sign = "-" if a < 0 else "+"
            magnitude = "" if abs(a) == 1 else f"{abs(a)} "
            if i == 0:
                parts.append(f"{'-' if a < 0 else ''}{magnitude}{name}")
            else:
                parts.append(f"{sign} {magnitude}{name}")
        return f"O({' '.join(parts)})"


def horizontal_curve(f: TrivialFibration, point: str) -> str:
    return f"{{{point}}}x{f.base}"


def vertical_curve(f: TrivialFibration, point: str) -> str:
    return f"{f.fibre}x{{{point}}}"


def graph_curve(map_name: str) -> str:
    return f"Gamma_{map_name}"


def symbol_line_bundle(symbol: SectionSymbol, f: TrivialFibration) -> FormalDivisor:
    """
    O(S - S0 - D_S) for one section S; D_S is made of the fibres over the
    points where S meets the zero section.
    """
    if isinstance(symbol, ZeroSection):
        return FormalDivisor()
    if isinstance(symbol, Horizontal):
        if symbol.point == f.origin:
            return FormalDivisor()
        return FormalDivisor.of({horizontal_curve(f, symbol.point): 1, horizontal_curve(f, f.origin): -1})
    if isinstance(symbol, Graph):
        terms = Counter({graph_curve(symbol.map_name): 1, horizontal_curve(f, f.origin): -1})
        for c in symbol.preimages:
            terms[vertical_curve(f, c)] -= 1
        return FormalDivisor.of(terms)
    raise UnsupportedParameterError(f"{type(symbol).__name__} is not a section.")


def section_line_bundle(s: SectionExpr | SectionSymbol, f: TrivialFibration | None = None) -> FormalDivisor:
    """
    Line bundle attached to a section; additive in the group law, so a
    combination maps to the matching combination of divisors.
    """
    f = f or TrivialFibration()
    if not isinstance(s, SectionExpr):
        s = SectionExpr.single(s)
    total = FormalDivisor()
    for symbol, coefficient in s.terms:
        total = total + symbol_line_bundle(symbol, f).scale(coefficient)
    return total
