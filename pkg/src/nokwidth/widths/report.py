from __future__ import annotations

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import nokwidth.logger as logger_mod
from nokwidth import config
from nokwidth.rootsys import (
    RootSystem,
    gromov_width_formula,
    minimizing_coroots,
    normalize_rational_weight,
    require_dominant,
    rho_p_decomposition,
)
from nokwidth.weyl import ReducedWord, UnsupportedType, telescope_relabeling

from .convex import verify_convex_ordering_theorem
from .good import verify_good_ordering_theorem, width_over_phi_p
from .telescope import verify_telescope_theorem
from .types import KINDS, SimplexReport, WidthReport

log = logger_mod.get_logger()


def width_report(
    rs: RootSystem,
    q: Sequence,
    constructions: Sequence[str] = KINDS,
    word: ReducedWord | Sequence[int] | None = None,
    jobs: int | None = None,
) -> WidthReport:
    """Width of a rational weight with the verdicts of the applicable constructions.

    Singular weights only go through the good-ordering construction, and the
    telescope is skipped for types without one.
    """
    fracs = tuple(Fraction(x) for x in q)
    lam, ell = normalize_rational_weight(fracs)
    lam = require_dominant(rs, lam)
    k = gromov_width_formula(rs, lam)
    k_p = width_over_phi_p(rs, lam)

    tasks: dict[str, Callable[[], SimplexReport]] = {}
    skipped: dict[str, str] = {}
    for kind in KINDS:
        if kind not in constructions:
            continue
        if kind == "good":
            tasks[kind] = lambda: verify_good_ordering_theorem(rs, lam)
            continue
        if not lam.is_regular():
            log.warning(f"⚠️ lambda={logger_mod.format_tuple(lam.coords)} is singular; skipping the {kind} construction")
            skipped[kind] = "singular weight"
            continue
        if kind == "convex":
            tasks[kind] = lambda: verify_convex_ordering_theorem(rs, word, lam)
        else:
            try:
                telescope_relabeling(rs)
            except UnsupportedType as exc:
                log.warning(f"⚠️ {exc}")
                skipped[kind] = f"unsupported type {rs.cartan_type}"
                continue
            tasks[kind] = lambda: verify_telescope_theorem(rs, lam)

    workers = max(1, jobs if jobs is not None else config.JOBS)
    if workers == 1 or len(tasks) < 2:
        reports = {kind: run() for kind, run in tasks.items()}
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {kind: pool.submit(run) for kind, run in tasks.items()}
            reports = {kind: futures[kind].result() for kind in tasks}

    return WidthReport(
        rational_input=fracs,
        lam=lam,
        ell=ell,
        width=Fraction(k) / ell,
        k=k,
        k_all_coroots=k,
        k_phi_p=k_p,
        minimizing=tuple(minimizing_coroots(rs, lam)),
        decomposition=rho_p_decomposition(rs, lam),
        reports=reports,
        skipped=skipped,
    )
