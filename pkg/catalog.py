"""
Named geometric cases: the Picard lattices with their embeddings into the
K3 lattice, the involutions on them, and the orders and section groups
built over quotient surfaces.

Scenario files refer to these by name, e.g. {"ref": "sextic", "n": 18}. The
Gram matrices, K3 images and involutions of the sextic, quadric and f2 cases
are read from corpus/data, so such a ref points at a checksummed data file.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import constants
from cohomology import GLattice
from fibration import AbGroupModel, BlockEndo
from lattice import Embedding, Lattice, build_K3, build_Q, hyperbolic_square
from surfaces import (
    Irreducibility,
    OrderDescriptor,
    RamifiedDivisor,
    SurfaceModel,
    surface_hirzebruch,
    surface_p2,
    surface_quadric,
    surface_ruled_elliptic,
)
from toolkit.datafile import IntRows, load_matrices
from toolkit.errors import SchemaError, UnsupportedParameterError
from toolkit.linalg import IntMatrix
from toolkit.utils.toolkit_math import lcm_all
from units import IntVector


@dataclass(frozen=True)
class GeometricCase:
    """
    A K3 Picard lattice embedded in the K3 lattice with a non-symplectic
    involution given on it, plus the classes used to certify ampleness.
    """

    name: str
    embedding: Embedding
    action: IntMatrix
    order: int
    ample: IntVector
    effective_gens: tuple[IntVector, ...]
    quotient: str

    @property
    def pic(self) -> Lattice:
        return self.embedding.source

    @property
    def glattice(self) -> GLattice:
        return GLattice(self.pic, self.action, self.order)


def _case(name: str, gram: Lattice, images: Sequence[IntVector], action: IntMatrix, ample: IntVector,
          gens: Sequence[IntVector], quotient: str) -> GeometricCase:
    embedding = Embedding(gram, build_K3(), IntMatrix.from_columns(images))
    return GeometricCase(name, embedding, action, 2, ample, tuple(gens), quotient)


def _units(n: int) -> list[IntVector]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def gamma_data(name: str) -> dict[str, IntRows]:
    """
    Verified matrices of corpus/data/gamma_<name>.json. Images are stored one
    row per Picard class, in the basis order of constants.K3_LABELS.
    """
    return load_matrices(constants.GAMMA_FILE.format(name=name))


def sextic_images() -> list[IntVector]:
    """
    Images of s1..s18 in the K3 lattice.
    """
    return list(gamma_data("sextic")["images"])


def sextic(n: int) -> GeometricCase:
    """
    Rank n Picard lattice Q_n (3 <= n <= 18) with s_i -> s1 + s2 - s_i; the
    quotient is the plane and the branch curve a sextic.
    """
    if not constants.Q_MIN_RANK <= n <= constants.Q_RANK:
        raise UnsupportedParameterError(f"Sextic cases exist for 3 <= n <= 18, got {n}.")
    action = IntMatrix.from_columns([
        tuple((1 if j < 2 else 0) - int(i == j) for j in range(n)) for i in range(n)
    ])
    s = (1, 1) + (0,) * (n - 2)
    return _case(f"sextic-n{n:02d}", build_Q(n), sextic_images()[:n], action, s, _units(n), "P2")


def _stored_case(name: str, ample: IntVector, extra_gen: IntVector, quotient: str) -> GeometricCase:
    data = gamma_data(name)
    rank = len(data["gram"])
    gram = Lattice.of(data["gram"], [f"s{i}" for i in range(1, rank + 1)])
    gens = _units(rank) + [extra_gen]
    return _case(name, gram, data["images"], IntMatrix(data["action"], cols=rank), ample, gens, quotient)


def quadric() -> GeometricCase:
    """
    Rank 4 case whose quotient is P1 x P1, branched on a (4, 4) curve.
    """
    return _stored_case("quadric", (1, 1, 1, 0), (0, 1, 1, -1), "P1xP1")


def f2() -> GeometricCase:
    """
    Rank 5 case whose quotient is the Hirzebruch surface F2.
    """
    return _stored_case("f2", (1, 1, 3, 3, 0), (0, 0, 1, 1, -1), "F2")


def nonintegral_witness() -> tuple[Embedding, IntMatrix]:
    """
    <e1 + 2 f1> in H + H with trivial action: its square is 4, so the
    extension by -1 has half-integral entries.
    """
    target = hyperbolic_square()
    images = IntMatrix.from_columns([(1, 2, 0, 0)])
    return Embedding.from_images(target, images, ("v",)), IntMatrix([[1]])


# Orders on quotient surfaces

def sextic_order() -> OrderDescriptor:
    return OrderDescriptor(surface_p2(), (RamifiedDivisor((6,), 2, Irreducibility.YES),), 2)


def p2_unramified() -> OrderDescriptor:
    return OrderDescriptor(surface_p2(), (), 1)


def p2_cubic() -> OrderDescriptor:
    return OrderDescriptor(surface_p2(), (RamifiedDivisor((3,), 2, Irreducibility.YES),), 2)


def quadric_order() -> OrderDescriptor:
    return OrderDescriptor(surface_quadric(), (RamifiedDivisor((4, 4), 2, Irreducibility.YES),), 2)


def f2_order() -> OrderDescriptor:
    return OrderDescriptor(surface_hirzebruch(2), (RamifiedDivisor((4, 8), 2, Irreducibility.YES),), 2)


RULED_ELLIPTIC_VECTORS: dict[str, tuple[int, ...]] = {
    "2222": (2, 2, 2, 2),
    "333": (3, 3, 3),
    "244": (2, 4, 4),
    "236": (2, 3, 6),
}


def ruled_elliptic_order(vector: Sequence[int], irreducible: Irreducibility = Irreducibility.YES) -> OrderDescriptor:
    """
    Order on E x P1 ramified on fibres E x {p_i} of the projection to P1,
    each numerically C0.
    """
    surface = surface_ruled_elliptic(0)
    ramification = tuple(RamifiedDivisor(surface.basis_class("C0"), e, irreducible) for e in vector)
    return OrderDescriptor(surface, ramification, lcm_all(vector))


# Bielliptic surfaces with cyclic group: type -> (group order, ramification vector)
BIELLIPTIC_TYPES: dict[int, tuple[int, tuple[int, ...]]] = {
    1: (2, (2, 2, 2, 2)),
    3: (4, (2, 4, 4)),
    5: (3, (3, 3, 3)),
    7: (6, (2, 3, 6)),
}


def bielliptic(type_number: int) -> tuple[int, tuple[int, ...]]:
    if type_number not in BIELLIPTIC_TYPES:
        raise UnsupportedParameterError(f"Cyclic bielliptic types are {sorted(BIELLIPTIC_TYPES)}, got {type_number}.")
    return BIELLIPTIC_TYPES[type_number]


# Section groups

def trivial_fibration(n: int) -> BlockEndo:
    """
    One elliptic summand with trivial action of order n.
    """
    return BlockEndo(AbGroupModel(elliptic_count=1), n)


def negation_fibration() -> BlockEndo:
    return BlockEndo(AbGroupModel(elliptic_count=1), 2, elliptic_signs=(-1,))


def gamma_psi_fibration() -> BlockEndo:
    """
    Pic0 E + Z S with both summands negated by an involution.
    """
    return BlockEndo(AbGroupModel(free_rank=1, elliptic_count=1), 2, IntMatrix([[-1]]), elliptic_signs=(-1,))


def cm_hom_fibration() -> BlockEndo:
    """
    Sections over an elliptic curve with complex multiplication by i: the free
    part is spanned by the identity S and the automorphism T, and the order 4
    action sends S to T and T to -S. The Pic0 summand is acted on trivially.
    """
    return BlockEndo(AbGroupModel(free_rank=2, elliptic_count=1), 4, IntMatrix([[0, -1], [1, 0]]))


def restriction_module(n: int) -> GLattice:
    """
    Rank 1 trivial module Z M of order n.
    """
    return GLattice(Lattice.of([[1]], ["M"]), IntMatrix.identity(1), n)


CASES: dict[str, Callable[..., GeometricCase]] = {
    "sextic": sextic,
    "quadric": quadric,
    "f2": f2,
}

ORDERS: dict[str, Callable[..., OrderDescriptor]] = {
    "sextic-p2": sextic_order,
    "p2-unramified": p2_unramified,
    "p2-cubic": p2_cubic,
    "quadric": quadric_order,
    "f2": f2_order,
}

FIBRATIONS: dict[str, Callable[..., BlockEndo]] = {
    "trivial": trivial_fibration,
    "negation": negation_fibration,
    "gamma-psi": gamma_psi_fibration,
    "cm-hom": cm_hom_fibration,
}


def case(ref: str, **params) -> GeometricCase:
    if ref not in CASES:
        raise SchemaError(f"Unknown case reference {ref!r}; known: {sorted(CASES)}.")
    return CASES[ref](**params)
