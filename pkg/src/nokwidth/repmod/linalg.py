"""Thin exact-rational helpers over sympy's DomainMatrix (dense, QQ).

Zero-size matrices are avoided throughout: an absent map or empty space is
``None``.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Rational = Fraction | int


def qq(x: Rational):
    f = Fraction(x)
    return QQ(f.numerator, f.denominator)


def to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def matrix(rows: Sequence[Sequence[Rational]]) -> DomainMatrix:
    return DomainMatrix([[qq(x) for x in row] for row in rows], (len(rows), len(rows[0])), QQ)


def column(values: Sequence[Rational]) -> DomainMatrix:
    return matrix([[v] for v in values])


def identity(n: int) -> DomainMatrix:
    return matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def column_values(m: DomainMatrix) -> tuple[Fraction, ...]:
    return tuple(to_fraction(row[0]) for row in m.to_list())


def entries(m: DomainMatrix) -> list[list[Fraction]]:
    return [[to_fraction(x) for x in row] for row in m.to_list()]


def is_zero(m: DomainMatrix | None) -> bool:
    return m is None or m.is_zero_matrix


def add(a: DomainMatrix | None, b: DomainMatrix | None) -> DomainMatrix | None:
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def mul(a: DomainMatrix | None, b: DomainMatrix | None) -> DomainMatrix | None:
    if a is None or b is None:
        return None
    return a * b


def scale(a: DomainMatrix | None, c: Rational) -> DomainMatrix | None:
    if a is None:
        return None
    return a * qq(c)


def pivots(m: DomainMatrix) -> tuple[int, ...]:
    """Pivot columns by fraction-free elimination on the integer numerator."""
    _, num = m.clear_denoms(convert=True)
    _, _, piv = num.rref_den()
    return tuple(piv)


def rank(m: DomainMatrix | None) -> int:
    if m is None:
        return 0
    return len(pivots(m))


def solve(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    """x with a x = b for square nonsingular ``a``."""
    return a.lu_solve(b)


def leading_minors_positive(g: DomainMatrix) -> bool:
    n = g.shape[0]
    for k in range(1, n + 1):
        idx = list(range(k))
        if g.extract(idx, idx).det() <= 0:
            return False
    return True
