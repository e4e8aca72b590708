from __future__ import annotations

import threading
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import product

import nokwidth.logger as logger_mod
from nokwidth.errors import InternalInvariantError
from nokwidth.repmod import (
    BuildLimits,
    HighestWeightModule,
    ModuleVector,
    RootVectorExpr,
    apply_root_vector,
    build_module,
    in_span,
    root_vector_expr,
)
from nokwidth.rootsys import RootSystem, Weight, is_weight_of, require_dominant, weyl_dim
from nokwidth.weyl import Enumeration

from .errors import LengthMismatch, SupportMismatch
from .order import right_lex_key
from .partitions import kostant_partitions
from .types import EssentialSet, ExponentTuple, TupleInfo

log = logger_mod.get_logger()


@dataclass
class _ClassScan:
    """Progress of the opposite-right-lex scan through one weight class."""

    parts: list[ExponentTuple]
    dim: int
    position: int = 0
    vectors: list[ModuleVector] = field(default_factory=list)
    essential: dict[ExponentTuple, int] = field(default_factory=dict)

    @property
    def done(self) -> bool:
        return self.position >= len(self.parts) or len(self.vectors) >= self.dim


class _Scanner:
    """PBW vectors F^m v_lambda and resumable per-weight scans for one enumeration."""

    def __init__(
        self,
        module: HighestWeightModule,
        e: Enumeration,
        exprs: Sequence[RootVectorExpr] | None = None,
    ):
        self.module = module
        self.roots = tuple(e.roots)
        rs = module.rs
        self.exprs = tuple(exprs) if exprs else tuple(root_vector_expr(rs, b) for b in self.roots)
        self._vectors: dict[ExponentTuple, ModuleVector] = {}
        self._classes: dict[tuple[int, ...], _ClassScan] = {}
        self._lock = threading.RLock()

    def nu_of(self, m: ExponentTuple) -> tuple[int, ...]:
        n = self.module.rs.rank
        return tuple(sum(k * b.coords[a] for k, b in zip(m, self.roots)) for a in range(n))

    def vector(self, m: ExponentTuple) -> ModuleVector:
        hit = self._vectors.get(m)
        if hit is not None:
            return hit
        j = next((k for k, x in enumerate(m) if x), None)
        if j is None:
            v = self.module.highest_vector()
        else:
            # F^m v = F_(beta_j) F^(m - e_j) v for the first nonzero j
            rest = m[:j] + (m[j] - 1,) + m[j + 1 :]
            inner = self.vector(rest)
            if inner.is_zero():
                v = self.module.zero_vector(self.nu_of(m))
            else:
                v = apply_root_vector(self.module, self.exprs[j], inner)
        self._vectors[m] = v
        return v

    def _class(self, nu: tuple[int, ...]) -> _ClassScan:
        scan = self._classes.get(nu)
        if scan is None:
            rs = self.module.rs
            parts = kostant_partitions(rs, nu, self.roots)
            # ascending opposite-right-lex
            parts.sort(key=right_lex_key, reverse=True)
            scan = self._classes[nu] = _ClassScan(parts=parts, dim=self.module.dim(nu))
        return scan

    def _step(self, scan: _ClassScan) -> None:
        m = scan.parts[scan.position]
        v = self.vector(m)
        if not in_span(self.module, v, scan.vectors):
            scan.essential[m] = scan.position
            scan.vectors.append(v)
        scan.position += 1

    def is_essential(self, m: ExponentTuple) -> bool:
        nu = self.nu_of(m)
        if not is_weight_of(self.module.rs, self.module.lam, nu):
            return False
        with self._lock:
            scan = self._class(nu)
            target = scan.parts.index(m)
            while scan.position <= target and not scan.done:
                self._step(scan)
            return m in scan.essential

    def scan_class(self, nu: tuple[int, ...]) -> _ClassScan:
        with self._lock:
            scan = self._class(nu)
            while not scan.done:
                self._step(scan)
            return scan


def _scanner(
    module: HighestWeightModule, e: Enumeration, exprs: Sequence[RootVectorExpr] | None
) -> _Scanner:
    if exprs:
        return _Scanner(module, e, exprs)
    with module.lock:
        cache = module.__dict__.setdefault("_scanners", {})
        key = tuple(e.roots)
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = _Scanner(module, e)
    return hit


def _check_support(lam: Weight, e: Enumeration) -> None:
    if not lam.support <= set(e.support):
        raise SupportMismatch(tuple(sorted(lam.support)), tuple(e.support))


def essential_set(
    rs: RootSystem,
    lam: Weight | Sequence[int],
    e: Enumeration,
    limits: BuildLimits | None = None,
    exprs: Sequence[RootVectorExpr] | None = None,
) -> EssentialSet:
    """es_P(lambda) for the enumeration ``e``, one weight class at a time."""
    lam = require_dominant(rs, lam)
    _check_support(lam, e)
    module = build_module(rs, lam, limits)
    scanner = _scanner(module, e, exprs)
    tuples: set[ExponentTuple] = set()
    info: dict[ExponentTuple, TupleInfo] = {}
    for nu in module.weights():
        scan = scanner.scan_class(nu)
        if len(scan.vectors) != scan.dim:
            log.error(f"❌ nu={nu}: {len(scan.vectors)} essential tuples for dimension {scan.dim}")
            raise InternalInvariantError(f"essential vectors do not span the weight space nu={nu}")
        for m, idx in scan.essential.items():
            tuples.add(m)
            info[m] = TupleInfo(nu=nu, scan_index=idx)
    expected = weyl_dim(rs, lam)
    if len(tuples) != expected:
        raise InternalInvariantError(f"|es(lambda)| = {len(tuples)}, dim V(lambda) = {expected}")
    log.info(f"✅ es{logger_mod.format_tuple(lam.coords)} for {rs.cartan_type} ({e.provenance}): {len(tuples)} tuples")
    return EssentialSet(lam=lam, enumeration=e, tuples=frozenset(tuples), info=info)


def is_essential(
    module: HighestWeightModule,
    e: Enumeration,
    m: Sequence[int],
    exprs: Sequence[RootVectorExpr] | None = None,
) -> bool:
    """Whether m is essential for V(lambda), scanning only m's weight class up to m."""
    m = tuple(int(x) for x in m)
    if len(m) != len(e.roots):
        raise LengthMismatch(len(m), len(e.roots))
    _check_support(module.lam, e)
    return _scanner(module, e, exprs).is_essential(m)


def gamma_level(
    rs: RootSystem,
    lam: Weight | Sequence[int],
    e: Enumeration,
    level: int,
    limits: BuildLimits | None = None,
) -> frozenset[tuple[int, ExponentTuple]]:
    """The level slice {level} x es_P(level * lambda)."""
    if level < 1:
        raise ValueError(f"level must be a positive integer, got {level}")
    lam = require_dominant(rs, lam)
    es = essential_set(rs, lam.scaled(level), e, limits)
    return frozenset((level, m) for m in es.tuples)


def essential_by_weight(es: EssentialSet) -> dict[tuple[int, ...], int]:
    """Number of essential tuples landing on each weight, keyed by nu."""
    out: dict[tuple[int, ...], int] = {}
    for m in es.tuples:
        nu = es.info[m].nu
        out[nu] = out.get(nu, 0) + 1
    return out


def su3_example_points() -> list[ExponentTuple]:
    """Lattice points of {x >= 0, x1 <= 1, x2 <= 1, x1 + x2 + x3 <= 2}."""
    return sorted(
        (x1, x2, x3)
        for x1, x2, x3 in product(range(3), repeat=3)
        if x1 <= 1 and x2 <= 1 and x1 + x2 + x3 <= 2
    )


def matches_example_polytope(es: EssentialSet) -> bool:
    """Whether es(rho) for A2 equals the example polytope's lattice points (reported only)."""
    return sorted(es.tuples) == su3_example_points()
