from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache

from nokwidth.rootsys import RootSystem, Weight

from .types import LoweringWord

Combination = dict[LoweringWord, Fraction]


def shapovalov_pair(
    rs: RootSystem, lam: Weight | Sequence[int], u: LoweringWord, w: LoweringWord
) -> Fraction:
    """Contravariant form <f_u v, f_w v> on the Verma module M(lambda).

    Uses <f_a u', w> = <u', e_a w> and e_a f_b = f_b e_a + delta_ab h_a. The
    values agree with the form on V(lambda), whose radical is the maximal
    submodule.
    """
    coords = lam.coords if isinstance(lam, Weight) else tuple(int(x) for x in lam)
    u, w = tuple(u), tuple(w)
    if Counter(u) != Counter(w):
        return Fraction(0)
    return _pair(rs, coords, u, w)


@lru_cache(maxsize=200_000)
def _pair(rs: RootSystem, lam: tuple[int, ...], u: LoweringWord, w: LoweringWord) -> Fraction:
    if not u:
        return Fraction(1) if not w else Fraction(0)
    a, rest = u[0], u[1:]
    total = Fraction(0)
    for word, c in _raise(rs, lam, a, w).items():
        total += c * _pair(rs, lam, rest, word)
    return total


@lru_cache(maxsize=200_000)
def _raise_cached(rs: RootSystem, lam: tuple[int, ...], a: int, w: LoweringWord) -> tuple:
    return tuple(_raise(rs, lam, a, w).items())


def _raise(rs: RootSystem, lam: tuple[int, ...], a: int, w: LoweringWord) -> Combination:
    """e_a f_w v_lambda as a combination of words."""
    if not w:
        return {}
    head, tail = w[0], w[1:]
    out: Combination = {}
    for word, c in _raise_cached(rs, lam, a, tail):
        key = (head,) + word
        out[key] = out.get(key, Fraction(0)) + c
    if head == a:
        # h_a on f_tail v: <lambda - sum alpha_tail, alpha_a^vee>
        h = lam[a - 1] - sum(rs.cartan[a - 1][b - 1] for b in tail)
        if h:
            out[tail] = out.get(tail, Fraction(0)) + h
    return {k: v for k, v in out.items() if v}
