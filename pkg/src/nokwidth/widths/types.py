from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from nokwidth.essential import ExponentTuple
from nokwidth.rootsys import RhoPDecomposition, RootVec, Weight
from nokwidth.weyl import Enumeration

KINDS = ("good", "convex", "telescope")


@dataclass(frozen=True)
class SimplexSpec:
    """Vertices of k times a simplex in the coordinates of ``enumeration``."""

    kind: str
    k: int
    vertices: tuple[ExponentTuple, ...]
    enumeration: Enumeration
    lam: Weight


@dataclass(frozen=True)
class SimplexReport:
    spec: SimplexSpec
    # vertex -> essential for V(lambda)
    verdicts: tuple[tuple[ExponentTuple, bool], ...]
    # named auxiliary checks, each must hold
    checks: dict[str, bool] = field(default_factory=dict, hash=False)
    # informative data (m^max tuples, per-unit-tuple witnesses, corner note)
    details: dict[str, object] = field(default_factory=dict, hash=False)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.verdicts) and all(self.checks.values())


@dataclass(frozen=True)
class WidthReport:
    """Width of a (rational) weight plus the verdict of every applicable construction."""

    rational_input: tuple[Fraction, ...]
    lam: Weight
    ell: Fraction
    width: Fraction
    k: int
    k_all_coroots: int
    k_phi_p: int
    minimizing: tuple[RootVec, ...]
    decomposition: RhoPDecomposition
    reports: dict[str, SimplexReport] = field(default_factory=dict, hash=False)
    skipped: dict[str, str] = field(default_factory=dict, hash=False)

    @property
    def passed(self) -> bool:
        return self.k_all_coroots == self.k_phi_p and all(
            r.passed for r in self.reports.values()
        )
