from __future__ import annotations

import nokwidth.logger as logger_mod
from nokwidth.essential import essential_set, gamma_level, right_lex_key
from nokwidth.repmod import BuildLimits
from nokwidth.rootsys import (
    RootSystem,
    Weight,
    coroot_pairing,
    hasse_edges,
    weyl_dim,
)
from nokwidth.weyl import Enumeration
from nokwidth.widths import (
    SimplexReport,
    WidthReport,
    verify_convex_ordering_theorem,
    verify_good_ordering_theorem,
    verify_telescope_theorem,
    width_report,
)

from .cases import CaseSpec

log = logger_mod.get_logger()

CONSTRUCTIONS = ("good", "convex", "telescope", "all")

def enumeration_doc(e: Enumeration) -> dict:
    doc: dict = {
        "provenance": e.provenance,
        "roots": [list(b.coords) for b in e.roots],
        "support": list(e.support),
    }
    if e.word is not None:
        doc["word"] = list(e.word.letters)
    if e.relabeling is not None:
        doc["relabeling"] = list(e.relabeling)
    return doc

def simplex_doc(report: SimplexReport) -> dict:
    spec = report.spec
    return {
        "kind": spec.kind,
        "k": spec.k,
        "lambda": list(spec.lam.coords),
        "enumeration": enumeration_doc(spec.enumeration),
        "vertices": [{"tuple": list(v), "essential": ok} for v, ok in report.verdicts],
        "checks": dict(report.checks),
        "details": report.details,
        "passed": report.passed,
    }

def cmd_roots(rs: RootSystem) -> tuple[dict, int]:
    n = rs.rank
    fundamentals = [Weight.fundamental(n, j) for j in rs.indices]
    output = {
        "cartan_type": str(rs.cartan_type),
        "cartan_matrix": [list(row) for row in rs.cartan],
        "symmetrizer": list(rs.sym),
        "count": len(rs.positive_roots),
        "positive_roots": [list(b.coords) for b in rs.positive_roots],
        "labels": [b.label() for b in rs.positive_roots],
        # row beta, column j: <w_j, beta^vee>
        "coroot_pairings": [
            [coroot_pairing(rs, w, b) for w in fundamentals] for b in rs.positive_roots
        ],
        "hasse_edges": [[list(b.coords), list(g.coords)] for b, g in hasse_edges(rs)],
    }
    return output, 0

def _width_fields(report: WidthReport) -> dict:
    return {
        "lambda_integral": list(report.lam.coords),
        "ell": report.ell,
        "width": report.width,
        "k_all_coroots": report.k_all_coroots,
        "k_phi_p": report.k_phi_p,
        "minimizing_coroots": [list(b.coords) for b in report.minimizing],
        "rho_p_decomposition": {
            "k": report.decomposition.k,
            "rho_p": list(report.decomposition.rho_p.coords),
            "remainder": list(report.decomposition.remainder.coords),
        },
    }

def cmd_width(rs: RootSystem, case: CaseSpec) -> tuple[dict, int]:
    return _width_fields(width_report(rs, case.lam, constructions=())), 0

def cmd_essential(rs: RootSystem, case: CaseSpec, limits: BuildLimits) -> tuple[dict, int]:
    lam = case.integral_weight(rs)
    target = lam.scaled(case.level)
    e = case.enumeration(rs, lam)
    es = essential_set(rs, target, e, limits)
    dim = weyl_dim(rs, target)
    output = {
        "lambda": list(target.coords),
        "level": case.level,
        "enumeration": enumeration_doc(e),
        "tuples": [list(m) for m in es.sorted_tuples()],
        "cardinality": len(es),
        "weyl_dim": dim,
        "matches_weyl_dim": len(es) == dim,
    }
    return output, 0

def cmd_gamma(rs: RootSystem, case: CaseSpec, limits: BuildLimits) -> tuple[dict, int]:
    lam = case.integral_weight(rs)
    e = case.enumeration(rs, lam)
    points = gamma_level(rs, lam, e, case.level, limits)
    dim = weyl_dim(rs, lam.scaled(case.level))
    ordered = sorted(points, key=lambda p: right_lex_key(p[1]))
    output = {
        "lambda": list(lam.coords),
        "level": case.level,
        "enumeration": enumeration_doc(e),
        "points": [[lvl, list(m)] for lvl, m in ordered],
        "cardinality": len(points),
        "weyl_dim": dim,
        "matches_weyl_dim": len(points) == dim,
    }
    return output, 0

def cmd_verify(
    rs: RootSystem, case: CaseSpec, construction: str, jobs: int | None = None
) -> tuple[dict, int]:
    """Run one construction (input errors propagate) or all applicable ones.

    Rational weights are normalized first either way.
    """
    if construction == "all":
        report = width_report(rs, case.lam, word=case.word, jobs=jobs)
        reports = report.reports
        skipped = report.skipped
    else:
        report = width_report(rs, case.lam, constructions=())
        if construction == "good":
            single = verify_good_ordering_theorem(rs, report.lam)
        elif construction == "convex":
            single = verify_convex_ordering_theorem(rs, case.word, report.lam)
        else:
            single = verify_telescope_theorem(rs, report.lam)
        reports = {construction: single}
        skipped = {}

    passed = report.k_all_coroots == report.k_phi_p and all(r.passed for r in reports.values())
    output = {
        **_width_fields(report),
        "constructions": {kind: simplex_doc(r) for kind, r in reports.items()},
        "skipped": skipped,
        "passed": passed,
    }
    if not passed:
        log.error(f"❌ Verification failed for {rs.cartan_type} lambda={logger_mod.format_tuple(case.lam)}")
    return output, 0 if passed else 1
