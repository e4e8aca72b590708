from __future__ import annotations

from collections.abc import Sequence

import nokwidth.logger as logger_mod
from nokwidth.essential import is_essential
from nokwidth.repmod import module_for
from nokwidth.rootsys import (
    RootSystem,
    Weight,
    as_weight,
    coroot_pairing,
    gromov_width_formula,
    phi_P_plus,
)
from nokwidth.weyl import good_ordering

from .errors import Disagreement
from .types import SimplexReport, SimplexSpec

log = logger_mod.get_logger()


def unit(n: int, i: int, k: int = 1) -> tuple[int, ...]:
    return tuple(k if j == i else 0 for j in range(n))


def width_over_phi_p(rs: RootSystem, lam: Weight) -> int:
    """min <lambda, beta^vee> over Phi_P^+ (P determined by supp(lambda))."""
    return min(coroot_pairing(rs, lam, b) for b in phi_P_plus(rs, lam.support))


def checked_width(rs: RootSystem, lam: Weight) -> int:
    k = gromov_width_formula(rs, lam)
    k_p = width_over_phi_p(rs, lam)
    if k != k_p:
        raise Disagreement("width over all coroots vs Phi_P^+", k, k_p)
    return k


def verify_good_ordering_theorem(rs: RootSystem, lam: Weight | Sequence[int]) -> SimplexReport:
    """k * standard simplex inside the body of V(lambda) for the good ordering.

    Vertices 0 and k e_i must be essential; each e_i must also be essential
    for some V(w_j), j in supp(lambda).
    """
    lam = as_weight(rs, lam)
    k = checked_width(rs, lam)
    e = good_ordering(rs, lam.support)
    n = len(e)
    module = module_for(rs, lam)
    vertices = ((0,) * n,) + tuple(unit(n, i, k) for i in range(n))
    verdicts = tuple((v, is_essential(module, e, v)) for v in vertices)

    witnesses: dict[str, int | None] = {}
    checks: dict[str, bool] = {}
    for i, beta in enumerate(e.roots):
        witness = None
        for j in sorted(lam.support):
            fund = Weight.fundamental(rs.rank, j)
            if is_essential(module_for(rs, fund), e, unit(n, i)):
                witness = j
                break
        witnesses[beta.label()] = witness
        checks[f"unit {i + 1} essential for a fundamental"] = witness is not None

    report = SimplexReport(
        spec=SimplexSpec(kind="good", k=k, vertices=vertices, enumeration=e, lam=lam),
        verdicts=verdicts,
        checks=checks,
        details={"fundamental_witness": witnesses},
    )
    mark = "✅" if report.passed else "❌"
    log.info(f"{mark} good ordering {rs.cartan_type} lambda={logger_mod.format_tuple(lam.coords)}: k={k}")
    return report
