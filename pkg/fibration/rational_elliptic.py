from typing import Sequence

from surfaces.models import SurfaceModel, surface_rational_elliptic
from toolkit.errors import NotANumericalSectionError
from units import IntVector, int_vector


def fibre_class(model: SurfaceModel | None = None) -> IntVector:
    """
    F = -K on the rational elliptic surface.
    """
    model = model or surface_rational_elliptic()
    return tuple(int(-x) for x in model.k_class)


def is_numerical_section(c: Sequence[int], model: SurfaceModel | None = None) -> bool:
    """
    E^2 = -1 and E.F = 1
    """
    model = model or surface_rational_elliptic()
    c = int_vector(c)
    return model.pair(c, c) == -1 and model.pair(c, fibre_class(model)) == 1


def mw_sum_rational_elliptic(
    c1: Sequence[int],
    c2: Sequence[int],
    s0: Sequence[int],
    model: SurfaceModel | None = None,
) -> IntVector:
    """
    Class of S1 + S2 in the Mordell-Weil group with zero section S0:
    S1 + S2 - S0 + alpha F with alpha = (S1 + S2).S0 - S1.S2 + 1.

    :raises NotANumericalSectionError: if an input is not a numerical section
    """
    model = model or surface_rational_elliptic()
    c1, c2, s0 = int_vector(c1), int_vector(c2), int_vector(s0)
    for name, c in (("c1", c1), ("c2", c2), ("s0", s0)):
        if not is_numerical_section(c, model):
            raise NotANumericalSectionError(f"{name} = {c} does not satisfy E^2 = -1, E.F = 1.")
    alpha = int(model.pair(c1, s0) + model.pair(c2, s0) - model.pair(c1, c2) + 1)
    F = fibre_class(model)
    return tuple(a + b - z + alpha * f for a, b, z, f in zip(c1, c2, s0, F))
