from __future__ import annotations

from fractions import Fraction
from math import gcd

from .types import CartanType


def _chain(rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    return a


def _link(a: list[list[int]], i: int, j: int) -> None:
    a[i - 1][j - 1] = -1
    a[j - 1][i - 1] = -1


def cartan_matrix(t: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix in Bourbaki numbering, ``A[i][j] = <alpha_j, alpha_i^vee>``."""
    n = t.rank
    if t.series == "A":
        a = _chain(n)
    elif t.series == "B":
        # alpha_n is the short root
        a = _chain(n)
        a[n - 1][n - 2] = -2
    elif t.series == "C":
        # alpha_n is the long root
        a = _chain(n)
        a[n - 2][n - 1] = -2
    elif t.series == "D":
        a = _chain(n - 1) + [[0] * (n - 1)]
        for row in a:
            row.append(0)
        a[n - 1][n - 1] = 2
        _link(a, n - 2, n)
    elif t.series == "E":
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        _link(a, 1, 3)
        _link(a, 2, 4)
        for i in range(3, n):
            _link(a, i, i + 1)
    elif t.series == "F":
        a = _chain(4)
        a[2][1] = -2
    else:
        # G2, alpha_1 short
        a = _chain(2)
        a[0][1] = -3
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Smallest positive integers d with d_i A[i][j] = d_j A[j][i].

    Propagates ratios along the Dynkin diagram from node 1, then clears
    denominators and common factors.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                # d_j = d_i A[i][j] / A[j][i]
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])  # type: ignore[operator]
                stack.append(j)
    if any(x is None for x in d):
        raise ValueError("Cartan matrix is not connected")
    vals = [x for x in d if x is not None]
    den = 1
    for x in vals:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)
