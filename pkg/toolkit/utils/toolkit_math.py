import itertools
import math
import random
from functools import reduce
from typing import Iterable, Iterator

from toolkit.linalg.matrix import IntMatrix


def clamp(val: int, _min: int, _max: int) -> int:
    """
    Clamps a value between a min and max

    Args:
        val (int): value to clamp
        _min (int): min value
        _max (int): max value

    Returns:
        int: clamped value
    """

    if val < _min:
        return _min
    if val > _max:
        return _max
    return val


def lcm_all(values: Iterable[int]) -> int:
    """
    Least common multiple of a list of positive integers. The empty list gives 1.
    """
    return reduce(math.lcm, values, 1)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def box_vectors(rank: int, bound: int) -> Iterator[tuple[int, ...]]:
    """
    Every integer vector with coordinates in [-bound, bound], in lexicographic order.
    """
    return itertools.product(range(-bound, bound + 1), repeat=rank)


def primitive_box_vectors(rank: int, bound: int) -> Iterator[tuple[int, ...]]:
    """
    Nonzero box vectors with coprime coordinates whose first nonzero entry is
    positive, so each rank-1 direct summand appears once.
    """
    for v in box_vectors(rank, bound):
        first = next((x for x in v if x != 0), 0)
        if first > 0 and gcd_all(v) == 1:
            yield v


def random_int_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> IntMatrix:
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_unimodular(rng: random.Random, n: int, steps: int = 12, bound: int = 2) -> IntMatrix:
    """
    Product of random elementary integer matrices (row additions, swaps, sign flips).

    Args:
        rng: seeded random source
        n: size
        steps: number of elementary operations
        bound: largest multiplier used in a row addition

    Returns:
        IntMatrix with determinant +1 or -1
    """
    U = IntMatrix.identity(n).array
    if n == 0:
        return IntMatrix.from_array(U)
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        if kind == 0 and n > 1:
            j = rng.choice([k for k in range(n) if k != i])
            U[i] = U[i] + rng.choice([k for k in range(-bound, bound + 1) if k != 0]) * U[j]
        elif kind == 1 and n > 1:
            j = rng.randrange(n)
            U[[i, j]] = U[[j, i]]
        else:
            U[i] = -U[i]
    return IntMatrix.from_array(U)
