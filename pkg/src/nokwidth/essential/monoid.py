from __future__ import annotations

import nokwidth.logger as logger_mod

from .errors import EnumerationMismatch
from .types import EssentialSet, ExponentTuple

log = logger_mod.get_logger()


def _check_comparable(es_a: EssentialSet, es_b: EssentialSet, es_ab: EssentialSet) -> None:
    roots = es_a.enumeration.roots
    if es_b.enumeration.roots != roots or es_ab.enumeration.roots != roots:
        raise EnumerationMismatch("the three sets use different enumerations")
    if (es_a.lam + es_b.lam) != es_ab.lam:
        raise EnumerationMismatch(
            f"{es_a.lam.coords} + {es_b.lam.coords} != {es_ab.lam.coords}"
        )


def _add(m: ExponentTuple, k: ExponentTuple) -> ExponentTuple:
    return tuple(a + b for a, b in zip(m, k))


def check_monoid_inclusion(
    es_a: EssentialSet, es_b: EssentialSet, es_ab: EssentialSet
) -> list[tuple[ExponentTuple, ExponentTuple]]:
    """Pairs (m, k) with m + k missing from es(mu + nu); empty when the monoid property holds."""
    _check_comparable(es_a, es_b, es_ab)
    bad = [
        (m, k)
        for m in sorted(es_a.tuples)
        for k in sorted(es_b.tuples)
        if _add(m, k) not in es_ab.tuples
    ]
    if bad:
        log.warning(f"⚠️ {len(bad)} sums fall outside es{logger_mod.format_tuple(es_ab.lam.coords)}")
    return bad


def minkowski_sum(es_a: EssentialSet, es_b: EssentialSet) -> frozenset[ExponentTuple]:
    return frozenset(_add(m, k) for m in es_a.tuples for k in es_b.tuples)


def minkowski_equality(es_a: EssentialSet, es_b: EssentialSet, es_ab: EssentialSet) -> bool:
    """Whether es(mu) + es(nu) equals es(mu + nu) exactly."""
    _check_comparable(es_a, es_b, es_ab)
    return minkowski_sum(es_a, es_b) == es_ab.tuples
