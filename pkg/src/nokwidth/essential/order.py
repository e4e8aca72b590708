from __future__ import annotations

from collections.abc import Sequence

from .errors import LengthMismatch, ZeroPolynomial
from .types import ExponentTuple, SparseExponentPolynomial

ORDERS = ("right-lex", "opposite-right-lex")


def right_lex_key(m: Sequence[int]) -> tuple[int, ...]:
    """Sort key for the right-lexicographic order: the last coordinate decides first."""
    return tuple(reversed(m))


def compare_tuples(m: Sequence[int], k: Sequence[int], order: str = "right-lex") -> int:
    """-1, 0 or 1 as m <, = or > k in ``order``."""
    if len(m) != len(k):
        raise LengthMismatch(len(m), len(k))
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order!r}")
    for a, b in zip(reversed(m), reversed(k)):
        if a != b:
            sign = -1 if a < b else 1
            return sign if order == "right-lex" else -sign
    return 0


def lowest_term_valuation(p: SparseExponentPolynomial) -> ExponentTuple:
    """Right-lex minimal exponent among the nonzero terms."""
    if p.is_zero():
        raise ZeroPolynomial()
    return min(p.terms, key=right_lex_key)
