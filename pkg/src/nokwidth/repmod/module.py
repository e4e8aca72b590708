from __future__ import annotations

import threading
from collections.abc import Sequence
from fractions import Fraction

import nokwidth.logger as logger_mod
from nokwidth.errors import InternalInvariantError
from nokwidth.rootsys import (
    RootSystem,
    Weight,
    is_weight_of,
    require_dominant,
    weight_below,
    weyl_dim,
)

from . import linalg
from ._limits import BuildLimits
from .errors import DimensionLimitExceeded, FormNotPositive, WeightMismatch
from .types import LoweringWord, ModuleVector, WeightSpace

log = logger_mod.get_logger()

_EMPTY: tuple = ()


class HighestWeightModule:
    """V(lambda), built lazily one weight space at a time.

    Weight spaces are keyed by nu in Q+ (the weight is lambda - nu). A space
    is computed from the spaces nu - alpha_i: candidates f_i b for basis
    words b of nu - alpha_i, Gram matrix from the contravariant form, and the
    pivot columns of that Gram matrix as the basis.
    """

    def __init__(self, rs: RootSystem, lam: Weight):
        self.rs = rs
        self.lam = lam
        self._spaces: dict[tuple[int, ...], WeightSpace] = {}
        self.lock = threading.RLock()
        self._complete = False
        zero = (0,) * rs.rank
        self._spaces[zero] = WeightSpace(
            nu=zero, words=((),), gram=linalg.identity(1), f_in={}, e_out={}
        )

    # -- weight spaces -------------------------------------------------

    def space(self, nu: Sequence[int]) -> WeightSpace:
        nu = tuple(nu)
        hit = self._spaces.get(nu)
        if hit is not None:
            return hit
        with self.lock:
            hit = self._spaces.get(nu)
            if hit is None:
                hit = self._fill(nu)
        return hit

    def dim(self, nu: Sequence[int]) -> int:
        return self.space(nu).dim

    def _empty(self, nu: tuple[int, ...]) -> WeightSpace:
        ws = WeightSpace(nu=nu, words=_EMPTY, gram=None)
        self._spaces[nu] = ws
        return ws

    def _fill(self, nu: tuple[int, ...]) -> WeightSpace:
        rs = self.rs
        if not is_weight_of(rs, self.lam, nu):
            return self._empty(nu)

        # parents nu - alpha_i with their basis; candidates (i, b)
        parents: list[tuple[int, tuple[int, ...], WeightSpace]] = []
        for i in rs.indices:
            p = _shift(nu, i, -1)
            if p is None:
                continue
            ps = self.space(p)
            if ps.dim:
                parents.append((i, p, ps))
        if not parents:
            return self._empty(nu)

        # rows[a]: e_i applied to every candidate, in the basis of parent a
        rows = []
        for i, p_i, ps_i in parents:
            blocks = []
            for j, p_j, ps_j in parents:
                # e_i f_j b = f_j e_i b + delta_ij h_i b
                grand = _shift(p_j, i, -1)
                block = None
                if grand is not None:
                    e_ib = ps_j.e_out.get(i)
                    f_j = ps_i.f_in.get(j)
                    block = linalg.mul(f_j, e_ib)
                if i == j:
                    h = self._h(p_j, i)
                    if h:
                        block = linalg.add(block, linalg.scale(linalg.identity(ps_i.dim), h))
                if block is None:
                    block = linalg.matrix([[0] * ps_j.dim for _ in range(ps_i.dim)])
                blocks.append(block)
            rows.append(blocks[0].hstack(*blocks[1:]) if len(blocks) > 1 else blocks[0])

        grams = [ps.gram * row for (_, _, ps), row in zip(parents, rows)]
        cand = grams[0].vstack(*grams[1:]) if len(grams) > 1 else grams[0]
        if cand != cand.transpose():
            log.error(f"❌ Candidate Gram matrix at nu={nu} is not symmetric")
            raise InternalInvariantError(f"asymmetric Gram matrix at nu={nu}")

        words: list[LoweringWord] = []
        spans: list[tuple[int, int]] = []
        start = 0
        for i, _, ps in parents:
            words.extend((i,) + b for b in ps.words)
            spans.append((start, start + ps.dim))
            start += ps.dim

        piv = list(linalg.pivots(cand))
        if not piv:
            return self._empty(nu)
        gram = cand.extract(piv, piv)
        f_in = {}
        e_out = {}
        for (i, _, _), (a, b), row in zip(parents, spans, rows):
            # f_i on the parent basis, solved against the new Gram matrix
            f_map = linalg.solve(gram, cand.extract(piv, list(range(a, b))))
            f_in[i] = None if f_map.is_zero_matrix else f_map
            e_map = row.extract(list(range(row.shape[0])), piv)
            e_out[i] = None if e_map.is_zero_matrix else e_map

        ws = WeightSpace(
            nu=nu,
            words=tuple(words[k] for k in piv),
            gram=gram,
            f_in=f_in,
            e_out=e_out,
        )
        self._spaces[nu] = ws
        fmt = logger_mod.format_tuple
        log.debug(f"V{fmt(self.lam.coords)}: nu={fmt(nu)} dim={ws.dim} from {len(words)} candidates")
        return ws

    def _h(self, p: tuple[int, ...], i: int) -> int:
        """<lambda - p, alpha_i^vee>."""
        return self.lam.coords[i - 1] - sum(
            c * a for c, a in zip(p, self.rs.cartan[i - 1])
        )

    # -- vectors -------------------------------------------------------

    def weight_of(self, nu: Sequence[int]) -> Weight:
        return weight_below(self.rs, self.lam, tuple(nu))

    def highest_vector(self) -> ModuleVector:
        zero = (0,) * self.rs.rank
        return ModuleVector(self.lam, zero, ((),), (Fraction(1),))

    def zero_vector(self, nu: Sequence[int]) -> ModuleVector:
        nu = tuple(nu)
        ws = self.space(nu) if all(c >= 0 for c in nu) else None
        words = ws.words if ws else ()
        return ModuleVector(self.weight_of(nu), nu, words, tuple(Fraction(0) for _ in words))

    def vector(self, nu: Sequence[int], coords: Sequence) -> ModuleVector:
        nu = tuple(nu)
        ws = self.space(nu)
        if len(coords) != ws.dim:
            raise ValueError(f"expected {ws.dim} coordinates at nu={nu}, got {len(coords)}")
        return ModuleVector(self.weight_of(nu), nu, ws.words, tuple(Fraction(c) for c in coords))

    def basis_vectors(self, nu: Sequence[int]) -> list[ModuleVector]:
        ws = self.space(nu)
        return [
            self.vector(nu, [1 if k == j else 0 for k in range(ws.dim)]) for j in range(ws.dim)
        ]

    def lower(self, i: int, v: ModuleVector) -> ModuleVector:
        """f_i v."""
        target = _shift(v.nu, i, +1)
        ws = self.space(target)
        f = ws.f_in.get(i) if ws.dim else None
        if f is None or v.is_zero():
            return self.zero_vector(target)
        return self.vector(target, linalg.column_values(f * linalg.column(v.coords)))

    def raise_(self, i: int, v: ModuleVector) -> ModuleVector:
        """e_i v."""
        target = _shift(v.nu, i, -1)
        if target is None:
            raw = list(v.nu)
            raw[i - 1] -= 1
            return self.zero_vector(raw)
        e = self.space(v.nu).e_out.get(i)
        if e is None or v.is_zero():
            return self.zero_vector(target)
        return self.vector(target, linalg.column_values(e * linalg.column(v.coords)))

    def pairing(self, u: ModuleVector, w: ModuleVector) -> Fraction:
        """Contravariant form of two vectors of the same weight."""
        if u.nu != w.nu:
            raise WeightMismatch(u.nu, w.nu)
        ws = self.space(u.nu)
        if not ws.dim:
            return Fraction(0)
        val = linalg.matrix([list(u.coords)]) * ws.gram * linalg.column(w.coords)
        return linalg.to_fraction(val.to_list()[0][0])

    # -- whole-module views -------------------------------------------

    def built_spaces(self) -> list[WeightSpace]:
        with self.lock:
            return [ws for ws in self._spaces.values() if ws.dim]

    def fill_all(self) -> None:
        """Fill every weight space, breadth-first by height."""
        with self.lock:
            if self._complete:
                return
            rs = self.rs
            layer = {(0,) * rs.rank}
            while layer:
                nxt = set()
                for nu in sorted(layer):
                    if not self.space(nu).dim:
                        continue
                    for i in rs.indices:
                        up = _shift(nu, i, +1)
                        if is_weight_of(rs, self.lam, up):
                            nxt.add(up)
                layer = nxt
            self._complete = True

    def weights(self) -> list[tuple[int, ...]]:
        """nu of every nonzero weight space (complete builds only)."""
        self.fill_all()
        return sorted((ws.nu for ws in self.built_spaces()), key=lambda n: (sum(n), n))

    @property
    def total_dim(self) -> int:
        self.fill_all()
        return sum(ws.dim for ws in self.built_spaces())


def _shift(nu: Sequence[int], i: int, sign: int) -> tuple[int, ...] | None:
    out = list(nu)
    out[i - 1] += sign
    if out[i - 1] < 0:
        return None
    return tuple(out)


_registry: dict[tuple[str, tuple[int, ...]], HighestWeightModule] = {}
_registry_lock = threading.Lock()


def module_for(rs: RootSystem, lam: Weight | Sequence[int]) -> HighestWeightModule:
    """Cached, lazily filled V(lambda); shared between callers and threads."""
    lam = require_dominant(rs, lam)
    key = (str(rs.cartan_type), lam.coords)
    with _registry_lock:
        mod = _registry.get(key)
        if mod is None:
            mod = _registry[key] = HighestWeightModule(rs, lam)
    return mod


def build_module(
    rs: RootSystem, lam: Weight | Sequence[int], limits: BuildLimits | None = None
) -> HighestWeightModule:
    """Complete V(lambda); refuses modules larger than ``limits.max_dim``."""
    lam = require_dominant(rs, lam)
    limits = limits or BuildLimits()
    expected = weyl_dim(rs, lam)
    if expected > limits.max_dim:
        raise DimensionLimitExceeded(expected, limits.max_dim, lam.coords)
    mod = module_for(rs, lam)
    mod.fill_all()
    total = mod.total_dim
    if total != expected:
        log.error(f"❌ V{logger_mod.format_tuple(lam.coords)}: built dimension {total}, Weyl formula {expected}")
        raise InternalInvariantError(f"dim V{lam.coords}: built {total}, expected {expected}")
    log.info(f"✅ Built V{logger_mod.format_tuple(lam.coords)} for {rs.cartan_type}: dim {total}")
    return mod


def apply_lowering(module: HighestWeightModule, op, v: ModuleVector) -> ModuleVector:
    """Apply a single f_i (an int) or a root vector expression to ``v``."""
    if isinstance(op, int):
        return module.lower(op, v)
    from .rootvectors import apply_root_vector

    return apply_root_vector(module, op, v)


def in_span(module: HighestWeightModule, v: ModuleVector, S: Sequence[ModuleVector]) -> bool:
    """Whether v lies in the span of S, by Gram ranks under the contravariant form."""
    for s in S:
        if s.nu != v.nu:
            raise WeightMismatch(v.nu, s.nu)
    if v.is_zero():
        return True
    vecs = [s for s in S if not s.is_zero()]
    if not vecs:
        return False
    g = module.space(v.nu).gram
    with_v = linalg.matrix([list(x.coords) for x in vecs + [v]]).transpose()
    without = with_v.extract(list(range(with_v.shape[0])), list(range(len(vecs))))
    r_without = linalg.rank(without.transpose() * g * without)
    r_with = linalg.rank(with_v.transpose() * g * with_v)
    return r_with == r_without


def gram_is_positive_definite(module: HighestWeightModule) -> bool:
    """Every leading principal minor of every stored Gram matrix is positive."""
    for ws in module.built_spaces():
        if not linalg.leading_minors_positive(ws.gram):
            raise FormNotPositive(ws.nu, "nonpositive leading minor")
    return True
