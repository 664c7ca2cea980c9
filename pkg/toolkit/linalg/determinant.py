from toolkit.linalg.matrix import IntMatrix


def det(A: IntMatrix) -> int:
    """
    Fraction-free (Bareiss) determinant.

    Every division is exact, so intermediate values stay integers.

    :raises NonSquareError: if A is not square
    """
    A.require_square()
    n = A.rows
    if n == 0:
        return 1
    M = A.array
    sign = 1
    previous = 1
    for k in range(n - 1):
        if M[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i, k] != 0), None)
            if swap is None:
                return 0
            M[[k, swap]] = M[[swap, k]]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i, j] = (M[i, j] * M[k, k] - M[i, k] * M[k, j]) // previous
        previous = M[k, k]
    return sign * M[n - 1, n - 1]


def cofactor_det(A: IntMatrix) -> int:
    """
    Laplace expansion along the first row. Exponential; only for checking det.
    """
    A.require_square()
    rows = A.to_rows()

    def expand(m: list[list[int]]) -> int:
        if not m:
            return 1
        total = 0
        for j, x in enumerate(m[0]):
            if x:
                minor = [r[:j] + r[j + 1:] for r in m[1:]]
                total += (-1) ** j * x * expand(minor)
        return total

    return expand(rows)
