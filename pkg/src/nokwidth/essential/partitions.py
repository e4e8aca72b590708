from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

from nokwidth.rootsys import RankMismatch, RootSystem, RootVec

from .types import ExponentTuple


def kostant_partitions(
    rs: RootSystem, nu: Sequence[int], allowed: Sequence[RootVec]
) -> list[ExponentTuple]:
    """Every m with sum m_i beta_i = nu, beta_i ranging over ``allowed``."""
    target = tuple(nu)
    if len(target) != rs.rank:
        raise RankMismatch(rs.rank, len(target))
    if any(c < 0 for c in target):
        return []
    roots = tuple(b.coords for b in allowed)

    @lru_cache(maxsize=None)
    def walk(k: int, remaining: tuple[int, ...]) -> tuple[ExponentTuple, ...]:
        if k == len(roots):
            return ((),) if not any(remaining) else ()
        beta = roots[k]
        out: list[ExponentTuple] = []
        rest = remaining
        count = 0
        while all(c >= 0 for c in rest):
            for tail in walk(k + 1, rest):
                out.append((count,) + tail)
            rest = tuple(r - b for r, b in zip(rest, beta))
            count += 1
        return tuple(out)

    return sorted(walk(0, target))
